"""Candidate-pole residues and cancellation reports.

A surface resolution datum describes one exceptional surface E_j of an
embedded resolution: its class, the curves cut out on it by the other
divisor components, and the numerical data (N, v) of every component.
The attached exponents alpha_i = v_i - (v_j / N_j) N_i turn E_j with its
curves into an ordinary configuration whose invariant is the residue
contribution R of E_j.  Vanishing of R is what cancellation of the
candidate pole at -v_j/N_j means here.

The same residue can be reached from the formal zeta-function side: the
terms of the motivic contribution carry one (L-1)T^N / (L^v - T^N)
factor per component, and multiplying by the j-factor's denominator and
substituting T = L^(v_j/N_j) collapses every remaining factor to
(L-1)/(L^alpha - 1) exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json

from .errors import ConfigError, DataError, GenericityError, SchemaError
from .motring import HodgePoly, from_hodge, from_int, lfactor, lpow, ring_sum
from .pvint import invariant_sum
from .surface import (Config, Curve, Report, _ambient_from_json,
                      _ambient_to_json, euler_complement, is_connected,
                      stratum_class, validate)

CREATIONS = ("point", "rational_curve", "nonrational_curve")


@dataclass(frozen=True)
class ResolutionComponent:
    """One curve cut out on the exceptional surface, with its (N, v)."""

    id: str
    genus: int
    self_int: int
    N: int
    v: int
    trace: int = 0

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise DataError(f"component {self.id}: N must be a positive integer")
        if not isinstance(self.v, int) or self.v < 1:
            raise DataError(f"component {self.id}: v must be a positive integer")


@dataclass(frozen=True)
class SurfaceResolutionDatum:
    """The data of one exceptional surface E_j.

    nj, vj are the numerical data of E_j itself; creation records how
    E_j arose (blowing up a point, a rational curve, or a curve of
    positive genus, the genus kept in creation_genus).
    """

    nj: int
    vj: int
    surface_hodge: HodgePoly
    creation: str
    components: tuple = ()
    points: tuple = ()
    creation_genus: int = 0

    def __post_init__(self):
        if not isinstance(self.nj, int) or self.nj < 1:
            raise DataError("N_j must be a positive integer")
        if not isinstance(self.vj, int) or self.vj < 1:
            raise DataError("v_j must be a positive integer")
        if self.creation not in CREATIONS:
            raise DataError(f"creation must be one of {CREATIONS}")
        if self.creation == "nonrational_curve" and self.creation_genus < 1:
            raise DataError("nonrational creation needs creation_genus >= 1")
        comps = tuple(self.components)
        ids = [c.id for c in comps]
        if len(set(ids)) != len(ids):
            raise DataError("duplicate component ids")
        idset = set(ids)
        pts = []
        for p in self.points:
            a, b = p
            if a not in idset or b not in idset or a == b:
                raise DataError(f"bad intersection pair {p!r}")
            pts.append((a, b) if a < b else (b, a))
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "points", tuple(sorted(pts)))


def alphas_from_numerical(datum):
    """Exponents alpha_i = v_i - (v_j/N_j) N_i, all required nonzero."""
    out = {}
    for c in datum.components:
        a = Fraction(c.v) - Fraction(datum.vj, datum.nj) * c.N
        if a == 0:
            raise GenericityError(
                f"component {c.id} has v/N = {datum.vj}/{datum.nj}, alpha = 0")
        out[c.id] = a
    return out


def build_config(datum):
    """The configuration on E_j induced by the numerical data (d = N_j)."""
    alphas = alphas_from_numerical(datum)
    curves = tuple(Curve(c.id, c.genus, c.self_int, alphas[c.id], c.trace)
                   for c in datum.components)
    seen = {}
    points = []
    for a, b in datum.points:
        points.append((a, b, seen.get((a, b), 0)))
        seen[(a, b)] = seen.get((a, b), 0) + 1
    return Config(d=datum.nj, ambient_hodge=datum.surface_hodge,
                  curves=curves, points=tuple(points))


def residue_contribution(datum):
    """R for this E_j: the invariant of the induced configuration."""
    cfg = build_config(datum)
    rep = validate(cfg)
    if not rep.ok:
        raise DataError("numerical data is inconsistent:\n" + str(rep))
    return invariant_sum(cfg)


# ---- formal zeta-function side ----------------------------------------


@dataclass(frozen=True)
class ZTerm:
    """One stratum term: its class and the (id, N, v) factors."""

    ids: tuple
    hodge: HodgePoly
    factors: tuple


@dataclass(frozen=True)
class ZTermList:
    n: int
    j: str
    terms: tuple

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, k):
        return self.terms[k]


@dataclass(frozen=True)
class ZMotDatum:
    """Strata classes and numerical data of an ambient resolution.

    n is the ambient dimension minus one (2 for surfaces in threefolds);
    strata pairs a sorted id subset with the class of its open stratum.
    """

    n: int
    strata: tuple
    numerical: dict = field(hash=False)

    def __post_init__(self):
        strata = tuple((tuple(sorted(ids)), h) for ids, h in self.strata)
        for ids, h in strata:
            for i in ids:
                if i not in self.numerical:
                    raise DataError(f"stratum id {i!r} has no numerical data")
            if not isinstance(h, HodgePoly):
                raise DataError("stratum classes must be HodgePoly")
        object.__setattr__(self, "strata", strata)


def zmot_contribution(z, j):
    """The formal terms of the contribution of component j.

    One term per stratum containing j; nothing is expanded, each term
    keeps its class and its (L-1)T^N / (L^v - T^N) factor data.
    """
    if j not in z.numerical:
        raise DataError(f"unknown component {j!r}")
    terms = []
    for ids, h in z.strata:
        if j not in ids:
            continue
        factors = tuple((i,) + tuple(z.numerical[i]) for i in ids)
        terms.append(ZTerm(ids, h, factors))
    if not terms:
        raise DataError(f"component {j!r} appears in no stratum")
    return ZTermList(n=z.n, j=j, terms=tuple(terms))


def zmot_from_surface(datum, j="Ej"):
    """ZMotDatum of the strata touching one exceptional surface (n = 2)."""
    cfg = build_config(datum)
    if j in cfg.curve_map:
        raise DataError(f"id {j!r} collides with a component id")
    strata = [((j,), stratum_class(cfg, ()))]
    for c in datum.components:
        strata.append(((j, c.id), stratum_class(cfg, (c.id,))))
    for (a, b), m in sorted(cfg.pair_counts.items()):
        strata.append(((j, a, b), HodgePoly.scalar(m)))
    numerical = {c.id: (c.N, c.v) for c in datum.components}
    numerical[j] = (datum.nj, datum.vj)
    return ZMotDatum(n=2, strata=tuple(strata), numerical=numerical)


def residue_via_substitution(terms, j, d=1):
    """Clear the j-factor denominator and substitute T = L^(v_j/N_j).

    Works in the realization ring with denominator d * N_j.  Every
    factor with i != j collapses to (L-1)/(L^alpha_i - 1); the j-factor
    leaves (L-1) L^(v_j) behind, and the whole sum carries L^-(n+1).
    """
    numerical = {}
    for t in terms:
        for i, N, v in t.factors:
            numerical[i] = (N, v)
    if j not in numerical:
        raise DataError(f"component {j!r} does not appear in the terms")
    nj, vj = numerical[j]
    d_eff = d * nj
    parts = []
    for t in terms:
        if j not in t.ids:
            raise DataError("every term must contain the component j")
        elem = from_hodge(t.hodge, d_eff)
        for i, N, v in t.factors:
            if i == j:
                continue
            a = Fraction(v) - Fraction(vj, nj) * N
            if a == 0:
                raise GenericityError(
                    f"substitution pole: component {i} has v/N = {vj}/{nj}")
            elem = elem * lfactor(a, d_eff)
        parts.append(elem)
    total = ring_sum(parts, d_eff)
    lm1 = lpow(1, d_eff) - from_int(1, d_eff)
    n = terms.n if hasattr(terms, "n") else 2
    return total * lm1 * lpow(vj, d_eff) * lpow(-(n + 1), d_eff)


# ---- verdicts ----------------------------------------------------------


def pole_report(datum):
    """Vanishing verdict for the candidate pole carried by this E_j.

    Expectation: creation by a point needs chi of the open part <= 0;
    creation by a rational curve additionally needs the divisor on E_j
    connected; creation by a non-rational curve always expects R = 0.
    A computed value against expectation is an error finding; data
    problems are reported as findings too, never raised.
    """
    rep = Report()
    try:
        cfg = build_config(datum)
        vrep = validate(cfg)
        if not vrep.ok:
            raise DataError("numerical data is inconsistent:\n" + str(vrep))
        R = invariant_sum(cfg)
    except (GenericityError, DataError) as exc:
        rep.add("error", "data", str(exc))
        return rep
    chi = euler_complement(cfg)
    conn = is_connected(cfg)
    rep.add("info", "chi", f"chi of the open part of E_j: {chi}")
    rep.add("info", "connectivity",
            "divisor on E_j is connected" if conn
            else "divisor on E_j is disconnected")
    vanishes = R.is_zero()
    if datum.creation == "point":
        expected = chi <= 0
        rule = "point-creation rule"
        reason = "chi > 0"
    elif datum.creation == "rational_curve":
        expected = chi <= 0 and conn
        rule = "rational-curve rule"
        reason = "chi > 0" if chi > 0 else "divisor on E_j is disconnected"
    else:
        expected = True
        rule = "non-rational-curve rule"
        reason = ""
    if expected and vanishes:
        rep.add("info", "verdict", f"cancellation as predicted ({rule})")
    elif expected:
        rep.add("error", "verdict",
                f"expected vanishing by the {rule}, but R is nonzero")
    else:
        rep.add("info", "verdict", f"no expectation ({reason})")
    return rep


def triangle_datum():
    """Three lines in general position on the plane, N = (1, 1, 4)."""
    return SurfaceResolutionDatum(
        nj=2, vj=1, surface_hodge=HodgePoly({(2, 2): 1, (1, 1): 1, (0, 0): 1}),
        creation="point",
        components=(
            ResolutionComponent("D1", 0, 1, 1, 1),
            ResolutionComponent("D2", 0, 1, 1, 1),
            ResolutionComponent("D3", 0, 1, 4, 1),
        ),
        points=(("D1", "D2"), ("D1", "D3"), ("D2", "D3")),
    )


# ---- JSON serialization -----------------------------------------------


def dump_datum(datum):
    out = {
        "nj": datum.nj,
        "vj": datum.vj,
        "surface": _ambient_to_json(datum.surface_hodge),
        "creation": datum.creation,
        "components": [
            {
                "id": c.id,
                "genus": c.genus,
                "self": c.self_int,
                "N": c.N,
                "v": c.v,
                **({"trace": c.trace} if c.trace else {}),
            }
            for c in datum.components
        ],
        "points": [list(p) for p in datum.points],
    }
    if datum.creation == "nonrational_curve":
        out["creation_genus"] = datum.creation_genus
    return out


def load_datum(obj):
    try:
        comps = tuple(
            ResolutionComponent(
                id=c["id"],
                genus=int(c.get("genus", 0)),
                self_int=int(c["self"]),
                N=int(c["N"]),
                v=int(c["v"]),
                trace=int(c.get("trace", 0)),
            )
            for c in obj.get("components", ())
        )
        return SurfaceResolutionDatum(
            nj=int(obj["nj"]),
            vj=int(obj["vj"]),
            surface_hodge=_ambient_from_json(obj.get("surface", {"kind": "plane"})),
            creation=obj.get("creation", "point"),
            components=comps,
            points=tuple(tuple(p) for p in obj.get("points", ())),
            creation_genus=int(obj.get("creation_genus", 0)),
        )
    except (ConfigError, DataError, KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad resolution datum: {exc}") from exc


def save_datum(datum, path):
    with open(path, "w") as fh:
        json.dump(dump_datum(datum), fh, indent=2)
        fh.write("\n")


def read_datum(path):
    with open(path) as fh:
        return load_datum(json.load(fh))
