"""Tabulate majority-vote accuracy against panel size, exact and simulated.

    python scripts/condorcet_curves.py --thetas 0.4 0.51 0.6 0.75 --max-n 51
"""

import argparse

from juristat.jury import PanelSpec, majority_prob, majority_prob_mc, min_panel_size


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--thetas", type=float, nargs="+", default=[0.3, 0.5, 0.51, 0.6, 0.75, 0.9])
    ap.add_argument("--max-n", type=int, default=31)
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--target", type=float, default=0.95)
    args = ap.parse_args()

    sizes = range(1, args.max_n + 1, 2)
    print("n".rjust(5) + "".join(f"{t:>12}" for t in args.thetas))
    for n in sizes:
        row = [majority_prob(PanelSpec(n, t)) for t in args.thetas]
        print(f"{n:>5}" + "".join(f"{p:>12.6f}" for p in row))

    print(f"\nsimulation check at n={args.max_n} ({args.trials} trials, seed {args.seed})")
    for t in args.thetas:
        spec = PanelSpec(args.max_n, t)
        exact, sim = majority_prob(spec), majority_prob_mc(spec, args.trials, args.seed)
        print(f"  theta={t:<6} exact={exact:.5f} simulated={sim:.5f} diff={sim - exact:+.5f}")

    print(f"\nsmallest odd panel reaching {args.target}")
    for t in args.thetas:
        if 0.5 < t < 1:
            print(f"  theta={t:<6} n={min_panel_size(t, args.target)}")


if __name__ == "__main__":
    main()
