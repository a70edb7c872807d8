"""Neural network autoregression NNAR(p, P, k)[m].

A single hidden layer of ``k = floor((p + P + 1) / 2)`` sigmoid units reads the
z-scored lags ``1..p`` and ``m, 2m, .., Pm`` and feeds a linear output. Each of
``repeats`` networks is trained by full-batch gradient descent from its own
seed; forecasts average the networks and are fed back recursively.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import TimeSeries
from ..errors import InvalidValue, TooShort
from .ar import fit_auto_ar
from .base import ModelId, check_horizon


def hidden_units(p: int, P: int) -> int:
    return max(1, (p + P + 1) // 2)


@dataclass(frozen=True)
class NnarSpec:
    p: int
    P: int
    m: int
    repeats: int = 20
    seed: int = 42
    epochs: int = 2000
    learning_rate: float = 0.01
    k: int = field(init=False)

    def __post_init__(self):
        if self.p < 1 or self.P < 0 or self.m < 1:
            raise InvalidValue(f"need p >= 1, P >= 0, m >= 1; got p={self.p} P={self.P} m={self.m}")
        if self.repeats < 1 or self.epochs < 0 or self.learning_rate <= 0:
            raise InvalidValue("repeats must be >= 1, epochs >= 0 and learning_rate > 0")
        object.__setattr__(self, "k", hidden_units(self.p, self.P))

    @property
    def lags(self) -> tuple[int, ...]:
        return tuple(sorted(set(range(1, self.p + 1)) | {j * self.m for j in range(1, self.P + 1)}))

    @property
    def label(self) -> str:
        return f"NNAR({self.p},{self.P},{self.k})[{self.m}]"


def _sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * x))


@dataclass(frozen=True, eq=False)
class NnarModel:
    spec: NnarSpec
    mean: float
    scale: float
    W1: np.ndarray = field(repr=False)  # (repeats, k, d)
    b1: np.ndarray = field(repr=False)  # (repeats, k)
    w2: np.ndarray = field(repr=False)  # (repeats, k)
    b2: np.ndarray = field(repr=False)  # (repeats,)
    history: tuple[float, ...] = field(repr=False)
    train_loss: np.ndarray = field(repr=False)
    model_id: ModelId = ModelId.NNAR

    def _predict_z(self, X: np.ndarray) -> np.ndarray:
        """Ensemble-mean output for standardized inputs ``X`` of shape (n, d)."""
        H = _sigmoid(np.einsum("nd,rkd->rnk", X, self.W1) + self.b1[:, None, :])
        out = np.einsum("rnk,rk->rn", H, self.w2) + self.b2[:, None]
        return out.mean(axis=0)

    def _z_history(self) -> np.ndarray:
        return (np.asarray(self.history) - self.mean) / self.scale

    def fitted_residuals(self) -> np.ndarray:
        """In-sample one-step residuals on the standardized scale."""
        z = self._z_history()
        X, target = lagged_matrix(z, self.spec.lags)
        return target - self._predict_z(X)

    def forecast(self, h: int) -> np.ndarray:
        h = check_horizon(h)
        lags = np.asarray(self.spec.lags)
        buf = list(self._z_history())
        out = np.empty(h)
        for i in range(h):
            x = np.asarray([buf[-l] for l in lags])[None, :]
            z = float(self._predict_z(x)[0])
            buf.append(z)
            out[i] = z
        return self.mean + self.scale * out

    def forecast_intervals(self, h: int, level: float = 0.95, n_sims: int = 1000, seed: int = 0):
        """Residual-bootstrap prediction interval; returns ``(lower, upper)`` arrays."""
        h = check_horizon(h)
        if not 0 < level < 1:
            raise InvalidValue(f"interval level must lie in (0, 1), got {level}")
        rng = np.random.default_rng(seed)
        resid = self.fitted_residuals()
        resid = resid - resid.mean()
        lags = np.asarray(self.spec.lags)
        z = self._z_history()
        paths = np.tile(z[-lags.max() :], (n_sims, 1))
        sims = np.empty((n_sims, h))
        for i in range(h):
            X = paths[:, -lags]
            step = self._predict_z(X) + rng.choice(resid, size=n_sims)
            paths = np.column_stack([paths, step])
            sims[:, i] = step
        tail = (1 - level) / 2
        lo, hi = np.quantile(sims, [tail, 1 - tail], axis=0)
        return self.mean + self.scale * lo, self.mean + self.scale * hi


def lagged_matrix(z: np.ndarray, lags: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    t0 = max(lags)
    X = np.column_stack([z[t0 - l : len(z) - l] for l in lags])
    return X, z[t0:]


def _init_weights(spec: NnarSpec, d: int):
    W1, b1, w2, b2 = [], [], [], []
    for r in range(spec.repeats):
        rng = np.random.default_rng(spec.seed + r)
        W1.append(rng.uniform(-0.5, 0.5, size=(spec.k, d)))
        b1.append(rng.uniform(-0.5, 0.5, size=spec.k))
        w2.append(rng.uniform(-0.5, 0.5, size=spec.k))
        b2.append(rng.uniform(-0.5, 0.5))
    return np.array(W1), np.array(b1), np.array(w2), np.array(b2)


def _loss_and_grads(params, X, y):
    W1, b1, w2, b2 = params
    H = _sigmoid(np.matmul(X, W1.transpose(0, 2, 1)) + b1[:, None, :])  # (r, n, k)
    err = np.matmul(H, w2[:, :, None])[:, :, 0] + b2[:, None] - y[None, :]
    loss = np.mean(err * err, axis=1)
    g_out = 2.0 * err / len(y)
    g_w2 = np.matmul(g_out[:, None, :], H)[:, 0, :]
    g_b2 = g_out.sum(axis=1)
    g_pre = g_out[:, :, None] * w2[:, None, :] * H * (1.0 - H)
    g_W1 = np.matmul(g_pre.transpose(0, 2, 1), X)
    g_b1 = g_pre.sum(axis=1)
    return loss, (g_W1, g_b1, g_w2, g_b2)


def _train(spec: NnarSpec, X: np.ndarray, y: np.ndarray):
    """Full-batch gradient descent; a network whose loss would rise rejects the step and halves its rate."""
    params = _init_weights(spec, X.shape[1])
    loss, grads = _loss_and_grads(params, X, y)
    lr = np.full(spec.repeats, spec.learning_rate)
    shapes = [(-1, 1, 1), (-1, 1), (-1, 1), (-1,)]
    for _ in range(spec.epochs):
        trial = tuple(p - lr.reshape(s) * g for p, g, s in zip(params, grads, shapes))
        new_loss, new_grads = _loss_and_grads(trial, X, y)
        ok = new_loss <= loss
        params = tuple(np.where(ok.reshape(s), t, p) for t, p, s in zip(trial, params, shapes))
        grads = tuple(np.where(ok.reshape(s), ng, g) for ng, g, s in zip(new_grads, grads, shapes))
        loss = np.where(ok, new_loss, loss)
        lr = np.where(ok, lr, lr / 2)
    return params, loss


def fit_nnar(train: TimeSeries, spec: NnarSpec) -> NnarModel:
    n = len(train)
    need = spec.P * spec.m + spec.p + 1
    if n < need:
        raise TooShort(f"{spec.label} needs at least {need} points, got {n}")
    y = train.as_array()
    mean = float(np.mean(y))
    scale = float(np.std(y))
    if not scale > 0:
        scale = 1.0
    z = (y - mean) / scale
    X, target = lagged_matrix(z, spec.lags)
    (W1, b1, w2, b2), loss = _train(spec, X, target)
    return NnarModel(spec, mean, scale, W1, b1, w2, b2, tuple(y), loss)


def default_spec(train: TimeSeries, seed: int = 42, repeats: int = 20) -> NnarSpec:
    """NNAR(p, P)[m] defaults: one seasonal lag when m > 1, and p the non-seasonal
    order of the AICc-selected linear AR (whose seasonal lag soaks up the season)."""
    m, n = train.frequency, len(train)
    P = 1 if m > 1 else 0
    max_p = min(12, n - 2 * m, n - P * m - 1)
    p = 1
    if max_p >= 1:
        p = max(1, fit_auto_ar(train, max_p=max_p).order)
    return NnarSpec(p=p, P=P, m=m, repeats=repeats, seed=seed)
