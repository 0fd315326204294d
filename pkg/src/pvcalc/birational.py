"""Blow-up and blow-down calculus on curve configurations.

A blow-up center is a point of the surface described combinatorially:
an intersection point of two configuration curves, a generic point of
one curve, or a point off the divisor.  The exceptional curve always
has genus 0 and self-intersection -1; its exponent follows the sum rule
alpha_E = (sum of exponents through the center) + (2 - #branches).

The invariant is unchanged by any blow-up except one pattern: a center
lying on a curve with exponent 0 whose two non-unit neighbors carry
opposite exponents a, -a with a not in {0, 1, -1}, the center away from
both.  For that pattern the change is the explicit nonzero element
(L-1)^2 / ((L^a - 1)(L^-a - 1)) + L.
"""

from dataclasses import dataclass

from .errors import CenterError, ContractionError, ValidationError
from .motring import HodgePoly, lfactor, lpow
from .pvint import e_invariant
from .surface import Config, Curve, validate

_UV = HodgePoly({(1, 1): 1})


@dataclass(frozen=True)
class BlowupCenter:
    """Where to blow up: kind is "point", "curve" or "free".

    For "point", a and b name the two curves and index picks the
    intersection point among several; for "curve", a names the curve.
    new_id, when given, names the exceptional curve.
    """

    kind: str
    a: str = None
    b: str = None
    index: int = 0
    new_id: str = None

    def __post_init__(self):
        if self.kind not in ("point", "curve", "free"):
            raise CenterError(f"unknown center kind {self.kind!r}")
        if self.kind == "point":
            if not (self.a and self.b):
                raise CenterError("point center needs two curve ids")
            if self.a == self.b:
                raise CenterError("point center needs two distinct curves")
            if self.b < self.a:
                a, b = self.a, self.b
                object.__setattr__(self, "a", b)
                object.__setattr__(self, "b", a)
            if not isinstance(self.index, int) or self.index < 0:
                raise CenterError("point index must be a nonnegative integer")
        elif self.kind == "curve" and not self.a:
            raise CenterError("curve center needs a curve id")


def at_point(a, b, index=0, new_id=None):
    return BlowupCenter("point", a, b, index, new_id)


def on_curve(a, new_id=None):
    return BlowupCenter("curve", a, new_id=new_id)


def free(new_id=None):
    return BlowupCenter("free", new_id=new_id)


def fresh_id(config, prefix="E"):
    """First unused id of the form prefix + number."""
    used = set(config.curve_map)
    k = 1
    while f"{prefix}{k}" in used:
        k += 1
    return f"{prefix}{k}"


def _check_center(config, center):
    """Resolve the center against the configuration; returns its curves."""
    if center.kind == "free":
        return ()
    if center.a not in config.curve_map:
        raise CenterError(f"no curve with id {center.a!r}")
    if center.kind == "curve":
        return (center.a,)
    if center.b not in config.curve_map:
        raise CenterError(f"no curve with id {center.b!r}")
    pt = (center.a, center.b, center.index)
    if pt not in config.points:
        raise CenterError(f"no intersection point {pt!r}")
    return (center.a, center.b)


def _next_index(config, a, b):
    if b < a:
        a, b = b, a
    used = {k for (x, y, k) in config.points if (x, y) == (a, b)}
    k = 0
    while k in used:
        k += 1
    return k


def blow_up(config, center):
    """Blow up one point; returns the transformed configuration.

    The ambient class gains uv.  Curves through the center lose 1 from
    their self-intersection and meet the new exceptional curve once.
    Adjunction defects and allowedness are preserved.
    """
    rep = validate(config)
    if not rep.ok:
        raise ValidationError("refusing to blow up an invalid configuration:\n"
                              + str(rep), rep)
    touched = _check_center(config, center)
    new_id = center.new_id or fresh_id(config)
    if new_id in config.curve_map:
        raise CenterError(f"id {new_id!r} is already in use")

    alpha = sum((config.curve(i).alpha for i in touched), 0) + 2 - len(touched)
    curves = []
    for c in config.curves:
        if c.id in touched:
            c = Curve(c.id, c.genus, c.self_int - 1, c.alpha, c.count_trace)
        curves.append(c)
    curves.append(Curve(new_id, 0, -1, alpha))

    points = [p for p in config.points
              if not (center.kind == "point"
                      and p == (center.a, center.b, center.index))]
    for i in touched:
        points.append((i, new_id, 0))

    return Config(d=config.d, ambient_hodge=config.ambient_hodge + _UV,
                  curves=tuple(curves), points=tuple(points))


def blow_down(config, curve_id):
    """Contract a (-1)-curve; exact inverse of blow_up.

    The curve must be rational with self-intersection -1, meet at most
    two others, each exactly once, and its exponent must match the sum
    rule for its neighbor pattern; anything else is an error rather than
    a silent fix-up.
    """
    c = config.curve(curve_id)
    if c.genus != 0:
        raise ContractionError(f"{curve_id} has genus {c.genus}, cannot contract")
    if c.self_int != -1:
        raise ContractionError(
            f"{curve_id} has self-intersection {c.self_int}, not -1")
    nbs = config.neighbors[curve_id]
    pts = config.points_on(curve_id)
    if len(pts) > 2 or len(pts) != len(nbs):
        raise ContractionError(
            f"{curve_id} meets other curves in {len(pts)} points, "
            "at most two simple crossings are contractible")
    expect = sum((config.curve(i).alpha for i in nbs), 0) + 2 - len(nbs)
    if c.alpha != expect:
        raise ContractionError(
            f"alpha of {curve_id} is {c.alpha}, the sum rule needs {expect}")

    curves = []
    for k in config.curves:
        if k.id == curve_id:
            continue
        if k.id in nbs:
            k = Curve(k.id, k.genus, k.self_int + 1, k.alpha, k.count_trace)
        curves.append(k)
    points = [p for p in config.points if curve_id not in (p[0], p[1])]
    if len(nbs) == 2:
        a, b = nbs
        points.append((a, b, _next_index(config, a, b)))
    return Config(d=config.d, ambient_hodge=config.ambient_hodge - _UV,
                  curves=tuple(curves), points=tuple(points))


def inverse_center(config, curve_id):
    """The center whose blow-up blow_down(config, curve_id) undoes.

    Point references are expressed in the contracted configuration.
    """
    c = config.curve(curve_id)
    if c.self_int != -1 or c.genus != 0:
        raise ContractionError(f"{curve_id} is not a (-1)-curve")
    nbs = config.neighbors[curve_id]
    if len(nbs) == 2:
        a, b = nbs
        return at_point(a, b, _next_index(config, a, b), new_id=curve_id)
    if len(nbs) == 1:
        return on_curve(nbs[0], new_id=curve_id)
    return free(new_id=curve_id)


def _zero_curve_pattern(config, i):
    """For a curve with alpha = 0: its two opposite non-unit neighbor
    exponents (a, -a) with a not in {0, 1, -1}, or None."""
    c = config.curve(i)
    if c.alpha != 0:
        return None
    special = [config.curve(j).alpha for j in config.neighbors[i]
               if config.curve(j).alpha != 1]
    if len(special) != 2:
        return None
    a1, a2 = special
    if a1 + a2 != 0 or a1 in (0, 1, -1):
        return None
    return (a1, a2)


def exceptional_alphas(config, center):
    """The (a, -a) pair driving a nonzero invariant change, or None."""
    touched = _check_center(config, center)
    if center.kind == "curve":
        return _zero_curve_pattern(config, center.a)
    if center.kind == "point":
        ca, cb = config.curve(center.a), config.curve(center.b)
        # the center must avoid the two special neighbors, so the other
        # branch through it has to be a unit curve
        if ca.alpha == 0 and cb.alpha == 1:
            return _zero_curve_pattern(config, center.a)
        if cb.alpha == 0 and ca.alpha == 1:
            return _zero_curve_pattern(config, center.b)
    return None


def is_exceptional_center(config, center):
    """Whether blowing up this center changes the invariant."""
    return exceptional_alphas(config, center) is not None


def invariance_delta(config, center):
    """e_invariant(blow_up(config, center)) - e_invariant(config).

    Zero except for exceptional centers, where it equals
    lfactor(a) * lfactor(-a) + L for the pattern exponents (a, -a).
    """
    return e_invariant(blow_up(config, center)) - e_invariant(config)


def exceptional_delta(a, d):
    """Closed form of the invariant change for the pattern (a, -a)."""
    return lfactor(a, d) * lfactor(-a, d) + lpow(1, d)


def add_unit_curve(config, genus, self_int, crossings):
    """Insert a curve with alpha = 1; the invariant does not change.

    crossings lists the ids of curves met transversally, with
    repetitions for multiple crossings.  The new curve must satisfy the
    adjunction identity; a wrong self_int is rejected.
    """
    new_id = fresh_id(config, "U")
    defect = self_int - (2 * genus - 2)
    for i in crossings:
        defect += config.curve(i).alpha - 1
    if defect != 0:
        raise ContractionError(
            f"unit curve with self-intersection {self_int} has "
            f"adjunction defect {defect}")
    curves = config.curves + (Curve(new_id, genus, self_int, 1),)
    points = list(config.points)
    seen = {}
    for i in crossings:
        points.append((i, new_id, seen.get(i, 0)))
        seen[i] = seen.get(i, 0) + 1
    return Config(d=config.d, ambient_hodge=config.ambient_hodge,
                  curves=curves, points=tuple(points))
