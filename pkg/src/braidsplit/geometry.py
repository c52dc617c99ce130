"""Vector-field cross-sections on configuration spaces of the flat torus and
Klein bottle.

Both surfaces are quotients of the plane: the torus by the unit translations,
the Klein bottle by (u, v) -> (u + 1, v) and the glide (u, v) -> (-u, v + 1).
The constant vertical field is invariant under both groups."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .presentations import Surface

TOLERANCE = 1e-12
FIELD = (0.0, 1.0)


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class SurfacePoint:
    u: float
    v: float
    M: Surface

    @classmethod
    def make(cls, u, v, M):
        """Reduce an arbitrary lift into the fundamental square."""
        M = Surface.parse(M)
        k = math.floor(v)
        v -= k
        if M is Surface.KLEIN and k % 2:
            u = -u
        return cls(u % 1.0, v % 1.0, M)

    def lift(self):
        return self.u, self.v


def deck(M, shift_u, shift_v, u, v):
    """Image of the lift (u, v) under t_u^shift_u g^shift_v, g the vertical generator."""
    if Surface.parse(M) is Surface.KLEIN and shift_v % 2:
        u = -u
    return u + shift_u, v + shift_v


def _wrap(d, period):
    d = abs(d) % period
    return min(d, period - d)


def metric_d(p, q, M=None):
    """Flat quotient metric between two points (or lifts given as pairs)."""
    M = Surface.parse(M if M is not None else p.M)
    pu, pv = p if isinstance(p, tuple) else p.lift()
    qu, qv = q if isinstance(q, tuple) else q.lift()
    if M is Surface.TORUS:
        return math.hypot(_wrap(pu - qu, 1.0), _wrap(pv - qv, 1.0))
    # translates of q are (+-qu + a, qv + b) with the sign flipping with b's parity
    even = math.hypot(_wrap(pu - qu, 1.0), _wrap(pv - qv, 2.0))
    odd = math.hypot(_wrap(pu + qu, 1.0), _wrap(pv - qv - 1.0, 2.0))
    return min(even, odd)


def metric_d_window(p, q, M, radius=2):
    """The same metric as a minimum over deck translates in a finite window."""
    M = Surface.parse(M)
    pu, pv = p if isinstance(p, tuple) else p.lift()
    qu, qv = q if isinstance(q, tuple) else q.lift()
    best = math.inf
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            tu, tv = deck(M, a, b, qu, qv)
            best = min(best, math.hypot(pu - tu, pv - tv))
    return best


def vector_field(p, M=None):
    return FIELD


def pushforward_field(M, shift_v, vec):
    """Differential of a deck map applied to a tangent vector."""
    du, dv = vec
    if Surface.parse(M) is Surface.KLEIN and shift_v % 2:
        du = -du
    return du, dv


@dataclass
class Configuration:
    """Points given as lifts (u, v), grouped into blocks."""

    M: Surface
    blocks: list  # list of lists of (u, v)

    @property
    def sizes(self):
        return [len(b) for b in self.blocks]

    def points(self):
        return [p for blk in self.blocks for p in blk]

    def reduced(self):
        return [[SurfacePoint.make(u, v, self.M) for u, v in blk] for blk in self.blocks]


def epsilon(points, M):
    """Minimum pairwise distance; 1 (the domain scale) when there is no pair."""
    points = list(points)
    if len(points) < 2:
        return 1.0
    eps = min(metric_d(p, q, M) for i, p in enumerate(points) for q in points[i + 1:])
    if eps <= 0:
        raise GeometryError("configuration has coincident points")
    return eps


def cross_section(config, multipliers):
    """Append a block: l_j points above each point of block j, offset along the
    field by q * eps / (2 (l_j + 1)) for q = 1..l_j."""
    M = Surface.parse(config.M)
    if len(multipliers) != len(config.blocks):
        raise GeometryError("one multiplier per block is required")
    if any(l < 0 for l in multipliers):
        raise GeometryError("multipliers must be nonnegative")
    eps = epsilon(config.points(), M)
    new = []
    for blk, l in zip(config.blocks, multipliers):
        step = eps / (2 * (l + 1))
        for u, v in blk:
            fu, fv = vector_field((u, v), M)
            new += [(u + q * step * fu, v + q * step * fv) for q in range(1, l + 1)]
    return Configuration(M, [list(b) for b in config.blocks] + [new])


def forget_last(config):
    return Configuration(config.M, [list(b) for b in config.blocks[:-1]])


def random_configuration(M, sizes, rng, min_gap=1e-6):
    M = Surface.parse(M)
    for _ in range(1000):
        pts = [(rng.random(), rng.random()) for _ in range(sum(sizes))]
        if len(pts) < 2 or epsilon(pts, M) > min_gap:
            break
    else:
        raise GeometryError("could not sample a configuration")
    blocks, i = [], 0
    for n in sizes:
        blocks.append(pts[i:i + n])
        i += n
    return Configuration(M, blocks)


# -- property checks ----------------------------------------------------------------

@dataclass
class SectionReport:
    M: Surface
    blocks: list
    multipliers: list
    trials: int
    seed: int
    failures: list = field(default_factory=list)  # {"trial", "check", "detail", "witness"}
    min_distance: float = math.inf
    counts: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {"surface": self.M.value, "blocks": self.blocks, "multipliers": self.multipliers,
                "trials": self.trials, "seed": self.seed, "ok": self.ok,
                "checks_passed": self.counts, "min_output_distance": self.min_distance,
                "failures": self.failures[:20]}


def _multiset_close(xs, ys, M):
    if len(xs) != len(ys):
        return False
    left = list(ys)
    for p in xs:
        j = next((j for j, q in enumerate(left) if metric_d(p, q, M) <= TOLERANCE), None)
        if j is None:
            return False
        left.pop(j)
    return True


def _trial(M, sizes, mult, rng, report, trial):
    x = random_configuration(M, sizes, rng)
    s = cross_section(x, mult)
    pts = s.points()
    witness = {"blocks": x.blocks}

    def record(check, ok, detail=""):
        report.counts[check] = report.counts.get(check, 0) + int(ok)
        if not ok:
            report.failures.append({"trial": trial, "check": check, "detail": detail, "witness": witness})

    dmin = epsilon(pts, M) if len(pts) > 1 else math.inf
    report.min_distance = min(report.min_distance, dmin)
    record("distinct", dmin > TOLERANCE, f"min distance {dmin}")

    record("section identity", forget_last(s).blocks == x.blocks)
    eps = epsilon(x.points(), M)
    base = [(p, l) for blk, l in zip(x.blocks, mult) for p in blk]
    worst = 0.0
    new = iter(s.blocks[-1])
    for p, l in base:
        for _ in range(l):
            worst = max(worst, metric_d(p, next(new), M))
    record("offsets below eps/2", worst < eps / 2, f"largest offset {worst}, eps {eps}")

    perm = Configuration(M, [rng.sample(b, len(b)) for b in x.blocks])
    record("permutation invariance", _multiset_close(cross_section(perm, mult).blocks[-1], s.blocks[-1], M))

    shifts = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in x.points()]
    it = iter(shifts)
    moved = Configuration(M, [[deck(M, *next(it), u, v) for u, v in b] for b in x.blocks])
    image = cross_section(moved, mult)
    it = iter(shifts)
    # the deck image of each new point, taken with the shift of its base point
    expected = []
    for b, l in zip(x.blocks, mult):
        for _ in b:
            su, sv = next(it)
            expected += [(su, sv)] * l
    deck_ok = all(metric_d(deck(M, su, sv, *p), q, M) <= TOLERANCE
                  for (su, sv), p, q in zip(expected, s.blocks[-1], image.blocks[-1]))
    field_ok = all(pushforward_field(M, sv, FIELD) == FIELD for _, sv in shifts)
    record("deck invariance", deck_ok and field_ok)

    delta = 1e-9 * eps
    nudged = Configuration(M, [[(u + rng.uniform(-delta, delta), v + rng.uniform(-delta, delta)) for u, v in b]
                               for b in x.blocks])
    moved_by = max((metric_d(p, q, M) for p, q in zip(s.blocks[-1], cross_section(nudged, mult).blocks[-1])),
                   default=0.0)
    # eps is 2-Lipschitz in the input, an offset below half of it moves by at most delta more
    bound = 2 * math.sqrt(2) * delta + TOLERANCE
    record("continuity", moved_by <= bound, f"moved {moved_by} > {bound}")


def check_section_properties(M, blocks, multipliers, trials=1000, seed=0):
    """Run the cross-section checks on ``trials`` random configurations."""
    M = Surface.parse(M)
    blocks, multipliers = list(blocks), list(multipliers)
    if len(blocks) != len(multipliers):
        raise GeometryError("one multiplier per block is required")
    if any(n < 1 for n in blocks) or any(l < 0 for l in multipliers):
        raise GeometryError("block sizes must be positive and multipliers nonnegative")
    rng = random.Random(seed)
    report = SectionReport(M, blocks, multipliers, trials, seed)
    for trial in range(trials):
        _trial(M, blocks, multipliers, rng, report, trial)
    return report
