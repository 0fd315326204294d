"""Curve configurations on smooth projective surfaces.

A configuration records the combinatorial shadow of a normal crossing
divisor on a surface: the ambient class (through its Hodge polynomial),
one entry per irreducible curve (genus, self-intersection, attached
rational exponent), and the set of intersection points.  Everything
downstream (invariants, blow-ups, residues) consumes this data only.

Curves meet transversally, two at a time, at distinct points, and two
curves may meet in several points; each point is listed once per
unordered pair, tagged with an index so that multiple intersections of
the same pair stay distinguishable.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import json

from .errors import ConfigError, SchemaError
from .motring import HodgePoly


def _as_fraction(a):
    if isinstance(a, Fraction):
        return a
    if isinstance(a, int):
        return Fraction(a)
    if isinstance(a, str):
        try:
            return Fraction(a)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad rational literal {a!r}") from exc
    raise ConfigError(f"cannot read {a!r} as a rational number")


@dataclass(frozen=True)
class Curve:
    """One irreducible curve of the configuration.

    count_trace tweaks the point count of the genus > 0 Jacobian part
    under the counting specialization; it is 0 for every curve produced
    by the built-in constructions and only matters for e_padic.
    """

    id: str
    genus: int
    self_int: int
    alpha: Fraction
    count_trace: int = 0

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise ConfigError("curve id must be a nonempty string")
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ConfigError(f"curve {self.id}: genus must be a nonnegative integer")
        if not isinstance(self.self_int, int):
            raise ConfigError(f"curve {self.id}: self-intersection must be an integer")
        object.__setattr__(self, "alpha", _as_fraction(self.alpha))
        if not isinstance(self.count_trace, int):
            raise ConfigError(f"curve {self.id}: count_trace must be an integer")


@dataclass(frozen=True)
class Config:
    """A curve configuration with exponents, in canonical sorted storage.

    d is the common denominator context: every alpha must be a multiple
    of 1/d (validate reports violations, construction does not).  Points
    are unordered pairs of distinct curve ids plus a small index.
    """

    d: int
    ambient_hodge: HodgePoly
    curves: tuple = ()
    points: tuple = ()

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ConfigError("denominator context d must be a positive integer")
        if not isinstance(self.ambient_hodge, HodgePoly):
            raise ConfigError("ambient_hodge must be a HodgePoly")
        curves = tuple(sorted(self.curves, key=lambda c: c.id))
        for c in curves:
            if not isinstance(c, Curve):
                raise ConfigError("curves must be Curve instances")
        ids = [c.id for c in curves]
        if len(set(ids)) != len(ids):
            raise ConfigError("duplicate curve ids")
        idset = set(ids)
        seen = set()
        pts = []
        for p in self.points:
            a, b, k = self._read_point(p)
            if a not in idset or b not in idset:
                raise ConfigError(f"point ({a},{b}) references an unknown curve")
            if (a, b, k) in seen:
                raise ConfigError(f"duplicate intersection point ({a},{b},{k})")
            seen.add((a, b, k))
            pts.append((a, b, k))
        object.__setattr__(self, "curves", curves)
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @staticmethod
    def _read_point(p):
        if len(p) == 2:
            a, b = p
            k = 0
        elif len(p) == 3:
            a, b, k = p
        else:
            raise ConfigError(f"point {p!r} must be (a, b) or (a, b, index)")
        if not (isinstance(a, str) and isinstance(b, str)):
            raise ConfigError(f"point {p!r}: curve ids must be strings")
        if a == b:
            raise ConfigError(f"point {p!r}: a curve cannot cross itself here")
        if not isinstance(k, int) or k < 0:
            raise ConfigError(f"point {p!r}: index must be a nonnegative integer")
        if b < a:
            a, b = b, a
        return a, b, k

    # ---- derived views ------------------------------------------------

    @cached_property
    def curve_map(self):
        return {c.id: c for c in self.curves}

    @cached_property
    def neighbors(self):
        """id -> sorted tuple of ids met at least once (no multiplicity)."""
        nb = {c.id: set() for c in self.curves}
        for a, b, _ in self.points:
            nb[a].add(b)
            nb[b].add(a)
        return {i: tuple(sorted(s)) for i, s in nb.items()}

    @cached_property
    def pair_counts(self):
        """(a, b) with a < b  ->  number of intersection points."""
        cnt = {}
        for a, b, _ in self.points:
            cnt[(a, b)] = cnt.get((a, b), 0) + 1
        return cnt

    def intersection(self, i, j):
        """Intersection number of two distinct curves of the configuration."""
        if i == j:
            raise ConfigError("use self_int for a curve against itself")
        a, b = (i, j) if i < j else (j, i)
        return self.pair_counts.get((a, b), 0)

    def points_on(self, i):
        return tuple(p for p in self.points if i in (p[0], p[1]))

    def curve(self, i):
        try:
            return self.curve_map[i]
        except KeyError:
            raise ConfigError(f"no curve with id {i!r}") from None

    def __hash__(self):
        return hash((self.d, self.ambient_hodge, self.curves, self.points))


# ---- ambient surface classes ----------------------------------------


def curve_class(genus):
    """Hodge polynomial of a smooth projective curve of the given genus."""
    if genus < 0:
        raise ConfigError("genus must be nonnegative")
    return HodgePoly({(1, 1): 1, (1, 0): -genus, (0, 1): -genus, (0, 0): 1})


def plane():
    """Hodge polynomial of the projective plane."""
    return HodgePoly({(2, 2): 1, (1, 1): 1, (0, 0): 1})


def ruled(genus):
    """Hodge polynomial of a ruled surface over a genus g curve."""
    return curve_class(0) * curve_class(genus)


# ---- numerical invariants --------------------------------------------


def euler_complement(config):
    """Topological Euler characteristic of the complement of the divisor.

    chi(X) minus the curves (each chi 2 - 2g) plus the points, which were
    subtracted twice.
    """
    chi = config.ambient_hodge.euler()
    for c in config.curves:
        chi -= 2 - 2 * c.genus
    chi += len(config.points)
    return chi


def is_connected(config):
    """Whether the divisor (union of all curves) is connected.

    An empty divisor counts as disconnected; validate attaches a warning
    in that case so the convention is visible.
    """
    if not config.curves:
        return False
    ids = [c.id for c in config.curves]
    nb = config.neighbors
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        for j in nb[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(ids)


def stratum_class(config, I):
    """Hodge polynomial of the locally closed stratum indexed by I.

    I empty: the ambient minus all curves.  I = {i}: the curve minus its
    points.  I = {i, j}: the class of their intersection (a count of
    points).  Larger I is impossible under normal crossings.
    """
    ids = tuple(I)
    if len(set(ids)) != len(ids):
        raise ConfigError("duplicate ids in stratum index")
    for i in ids:
        config.curve(i)
    if len(ids) == 0:
        h = config.ambient_hodge
        for c in config.curves:
            h = h - curve_class(c.genus)
        h = h + HodgePoly.scalar(len(config.points))
        return h
    if len(ids) == 1:
        c = config.curve(ids[0])
        return curve_class(c.genus) - HodgePoly.scalar(len(config.points_on(ids[0])))
    if len(ids) == 2:
        return HodgePoly.scalar(config.intersection(ids[0], ids[1]))
    raise ConfigError("at most two curves pass through any point")


def adjunction_defect(config, i):
    """How far curve i is from the exponent adjunction identity.

    alpha_i * (C_i . C_i) + sum over the other curves of
    (alpha_l - 1) * (C_i . C_l) must equal 2 g_i - 2; returns the
    difference (0 means consistent).
    """
    c = config.curve(i)
    total = c.alpha * c.self_int
    for (a, b), n in config.pair_counts.items():
        if i == a:
            other = b
        elif i == b:
            other = a
        else:
            continue
        total += (config.curve(other).alpha - 1) * n
    return total - (2 * c.genus - 2)


def is_allowed(config, i):
    """Allowedness of a curve with alpha = 0.

    Requires genus 0, no neighbor with alpha = 0, and at most two
    intersection points lying on curves with alpha distinct from 1.
    Curves with nonzero alpha are unconstrained (returns True).
    """
    c = config.curve(i)
    if c.alpha != 0:
        return True
    if c.genus != 0:
        return False
    special = 0
    for a, b, _ in config.points:
        if i == a:
            other = b
        elif i == b:
            other = a
        else:
            continue
        al = config.curve(other).alpha
        if al == 0:
            return False
        if al != 1:
            special += 1
    return special <= 2


# ---- validation -------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    severity: str  # "error", "warning" or "info"
    code: str
    message: str

    def __str__(self):
        return f"{self.severity} {self.code}: {self.message}"


@dataclass
class Report:
    findings: list = field(default_factory=list)

    @property
    def ok(self):
        return not any(f.severity == "error" for f in self.findings)

    def add(self, severity, code, message):
        self.findings.append(Finding(severity, code, message))

    def errors(self):
        return [f for f in self.findings if f.severity == "error"]

    def __str__(self):
        return "\n".join(str(f) for f in self.findings) if self.findings else "ok"


def validate(config):
    """Semantic checks on a structurally sound configuration.

    Errors: exponents outside (1/d) Z, adjunction failures, alpha = 0
    curves that are not allowed.  Info findings carry the Euler
    characteristic of the complement and the connectivity of the divisor.
    """
    rep = Report()
    d = config.d
    for c in config.curves:
        if (c.alpha * d).denominator != 1:
            rep.add("error", "alpha-context",
                    f"alpha {c.alpha} of {c.id} is not a multiple of 1/{d}")
    for c in config.curves:
        defect = adjunction_defect(config, c.id)
        if defect != 0:
            rep.add("error", "adjunction",
                    f"adjunction defect {defect} on {c.id}")
    for c in config.curves:
        if c.alpha != 0 or is_allowed(config, c.id):
            continue
        if c.genus != 0:
            rep.add("error", "allowed-genus",
                    f"curve {c.id} with alpha 0 must be rational (genus {c.genus})")
            continue
        bad = [j for j in config.neighbors[c.id] if config.curve(j).alpha == 0]
        if bad:
            rep.add("error", "allowed-log-neighbor",
                    f"curves {c.id} and {bad[0]} both have alpha 0 and intersect")
            continue
        special = sum(n for (a, b), n in config.pair_counts.items()
                      if c.id in (a, b)
                      and config.curve(b if a == c.id else a).alpha != 1)
        rep.add("error", "allowed-points",
                f"curve {c.id} with alpha 0 meets curves with alpha != 1 "
                f"in {special} points (at most 2)")
    rep.add("info", "chi",
            f"euler characteristic of the open complement: {euler_complement(config)}")
    if not config.curves:
        rep.add("warning", "connectivity",
                "empty divisor counts as disconnected")
    else:
        rep.add("info", "connectivity",
                "divisor is connected" if is_connected(config)
                else "divisor is disconnected")
    return rep


# ---- JSON serialization -----------------------------------------------


def _ambient_to_json(h):
    """Encode a Hodge polynomial as plane/ruled plus blow-ups if possible."""
    diff = h - plane()
    b = diff.coeff(1, 1)
    if b >= 0 and diff == HodgePoly({(1, 1): b}):
        out = {"kind": "plane"}
        if b:
            out["blowups"] = b
        return out
    g = -h.coeff(1, 0)
    if g >= 0:
        diff = h - ruled(g)
        b = diff.coeff(1, 1)
        if b >= 0 and diff == HodgePoly({(1, 1): b}):
            out = {"kind": "ruled", "genus": g}
            if b:
                out["blowups"] = b
            return out
    return {"kind": "custom",
            "terms": [[eu, ev, c] for (eu, ev), c in sorted(h.items())]}


def _ambient_from_json(obj):
    kind = obj.get("kind")
    if kind == "plane":
        h = plane()
    elif kind == "ruled":
        h = ruled(int(obj.get("genus", 0)))
    elif kind == "custom":
        h = HodgePoly({(int(eu), int(ev)): int(c) for eu, ev, c in obj["terms"]})
        return h
    else:
        raise ConfigError(f"unknown ambient kind {kind!r}")
    b = int(obj.get("blowups", 0))
    if b < 0:
        raise ConfigError("blowups must be nonnegative")
    return h + HodgePoly({(1, 1): b})


def dump_config(config):
    """Plain-data dict for a configuration; exact rationals as strings."""
    return {
        "d": config.d,
        "ambient": _ambient_to_json(config.ambient_hodge),
        "curves": [
            {
                "id": c.id,
                "genus": c.genus,
                "self_int": c.self_int,
                "alpha": str(c.alpha),
                **({"count_trace": c.count_trace} if c.count_trace else {}),
            }
            for c in config.curves
        ],
        "points": [list(p) for p in config.points],
    }


def load_config(obj, default_d=None):
    """Build a Config from plain data (inverse of dump_config).

    Structural problems raise SchemaError so that callers reading user
    files can map them to an input failure uniformly.
    """
    try:
        if not isinstance(obj, dict):
            raise ConfigError("configuration document must be an object")
        if "d" in obj:
            d = obj["d"]
        elif default_d is not None:
            d = default_d
        else:
            raise ConfigError("missing denominator context d")
        if not isinstance(d, int):
            raise ConfigError("d must be an integer")
        ambient = _ambient_from_json(obj.get("ambient", {"kind": "plane"}))
        curves = []
        for c in obj.get("curves", ()):
            curves.append(Curve(
                id=c["id"],
                genus=int(c.get("genus", 0)),
                self_int=int(c["self_int"]),
                alpha=_as_fraction(c["alpha"]),
                count_trace=int(c.get("count_trace", 0)),
            ))
        points = []
        for p in obj.get("points", ()):
            points.append(tuple(p))
        return Config(d=d, ambient_hodge=ambient,
                      curves=tuple(curves), points=tuple(points))
    except (ConfigError, KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad configuration data: {exc}") from exc


def save_config(config, path):
    with open(path, "w") as fh:
        json.dump(dump_config(config), fh, indent=2, sort_keys=False)
        fh.write("\n")


def read_config(path, default_d=None):
    with open(path) as fh:
        obj = json.load(fh)
    return load_config(obj, default_d=default_d)
