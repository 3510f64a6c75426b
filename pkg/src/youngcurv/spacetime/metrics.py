"""Built-in metrics, all with signature (+,-,-,-) and time coordinate x^0."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .jet import Jet2, coordinates, cos, sin

Evaluator = Callable[[Sequence, Mapping[str, float]], list]


@dataclass(frozen=True)
class MetricProvider:
    name: str
    evaluator: Evaluator
    parameters: Mapping[str, float] = field(default_factory=dict)
    default_point: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    stationary: bool = True
    synchronized: bool = False

    def with_parameters(self, **params: float) -> "MetricProvider":
        unknown = set(params) - set(self.parameters)
        if unknown:
            raise ValueError(f"unknown parameters for {self.name}: {sorted(unknown)}")
        merged = {**self.parameters, **{k: float(v) for k, v in params.items()}}
        return MetricProvider(self.name, self.evaluator, merged, self.default_point,
                              self.stationary, self.synchronized)

    def __call__(self, x: Sequence) -> list[list]:
        """4x4 metric components at coordinates x (floats or Jet2)."""
        g = self.evaluator(x, self.parameters)
        for i in range(4):
            for j in range(i):
                g[j][i] = g[i][j]
        return g

    def jets(self, x: Sequence[float]) -> list[list[Jet2]]:
        return [[Jet2.lift(c) for c in row] for row in self(coordinates(x))]


def _minkowski(x, p):
    g = [[0.0] * 4 for _ in range(4)]
    g[0][0], g[1][1], g[2][2], g[3][3] = 1.0, -1.0, -1.0, -1.0
    return g


def _schwarzschild(x, p):
    # (t, r, theta, phi)
    m = p["m"]
    _, r, th, _ = x
    f = 1 - 2 * m / r
    g = [[0.0] * 4 for _ in range(4)]
    g[0][0] = f
    g[1][1] = -1 / f
    g[2][2] = -(r * r)
    g[3][3] = -(r * r) * sin(th) ** 2
    return g


def _langevin(x, p):
    # rotating cylindrical frame (t, rho, phi, z)
    w = p["omega"]
    _, rho, _, _ = x
    g = [[0.0] * 4 for _ in range(4)]
    g[0][0] = 1 - w * w * rho * rho
    g[2][0] = -w * rho * rho
    g[1][1] = -1.0
    g[2][2] = -(rho * rho)
    g[3][3] = -1.0
    return g


def _kerr(x, p):
    # Boyer-Lindquist (t, r, theta, phi)
    m, a = p["m"], p["a"]
    _, r, th, _ = x
    s2 = sin(th) ** 2
    sigma = r * r + a * a * cos(th) ** 2
    delta = r * r - 2 * m * r + a * a
    g = [[0.0] * 4 for _ in range(4)]
    g[0][0] = 1 - 2 * m * r / sigma
    g[3][0] = 2 * m * a * r * s2 / sigma
    g[1][1] = -sigma / delta
    g[2][2] = -sigma
    g[3][3] = -(r * r + a * a + 2 * m * a * a * r * s2 / sigma) * s2
    return g


def _flrw(x, p):
    # flat FLRW with scale factor a(t) = t
    t = x[0]
    g = [[0.0] * 4 for _ in range(4)]
    g[0][0] = 1.0
    for i in (1, 2, 3):
        g[i][i] = -(t * t)
    return g


CATALOG: dict[str, MetricProvider] = {
    "minkowski": MetricProvider("minkowski", _minkowski, {}, (0.0, 1.0, 1.0, 1.0),
                                stationary=True, synchronized=True),
    "schwarzschild": MetricProvider("schwarzschild", _schwarzschild, {"m": 1.0},
                                    (0.0, 6.0, 1.0, 0.5)),
    "langevin": MetricProvider("langevin", _langevin, {"omega": 0.1}, (0.0, 2.0, 0.0, 0.0)),
    "kerr": MetricProvider("kerr", _kerr, {"m": 1.0, "a": 0.6}, (0.0, 5.0, 1.1, 0.3)),
    "flrw": MetricProvider("flrw", _flrw, {}, (2.0, 0.3, 0.4, 0.5),
                           stationary=False, synchronized=True),
}


def get_metric(name: str, **params: float) -> MetricProvider:
    try:
        provider = CATALOG[name.lower()]
    except KeyError:
        raise ValueError(f"unknown metric {name!r}; choose from {sorted(CATALOG)}") from None
    return provider.with_parameters(**params) if params else provider
