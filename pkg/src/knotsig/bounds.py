"""Genus lower bounds read off a signature function.

* doubly slice genus:  ``g_ds >= max |σ_ω|`` over all ``ω ≠ 1``, roots of Δ included;
* slice genus:         ``2 g_4 >= |σ̄_ω|`` for the averaged signature at every ω.
"""

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .realalg import approx_decimal
from .seifert import validate
from .signature import MINUS_ONE, signature_function, theta_over_pi


class BoundsError(RuntimeError):
    """A bound computation failed; the message names the knot."""


@dataclass(frozen=True)
class Witness:
    """Where a bound is attained: an arc of the step function or a jump abscissa."""

    kind: str  # "arc" or "root"
    index: int
    value: Fraction  # σ on an arc or at a root; averaged σ for the slice bound

    def describe(self, f):
        if self.kind == "root":
            x = f.jumps[self.index]
            return (f"root x={approx_decimal(x)} (theta/pi={theta_over_pi(x)}) "
                    f"value={_fmt(self.value)}")
        pt = f.arc_samples[self.index] if f.arc_samples else None
        where = "omega=-1" if pt is MINUS_ONE or pt is None else f"c={pt.c} s={pt.s}"
        return f"arc {self.index} ({where}) value={_fmt(self.value)}"

    def to_dict(self, f):
        d = {"kind": self.kind, "index": self.index, "value": _fmt(self.value),
             "description": self.describe(f)}
        if self.kind == "root":
            x = f.jumps[self.index]
            d["min_poly"] = list(x.min_poly)
            d["interval"] = [str(x.lo), str(x.hi)]
        return d


def _fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _best(candidates):
    # candidates: (bound, witness); ties go to roots, then to the lowest index
    return max(candidates, key=lambda c: (c[0], c[1].kind == "root", -c[1].index))


def gds_lower_bound(f):
    """Largest ``|σ|`` over arcs and jump points, with a witness."""
    cands = [(abs(v), Witness("arc", i, Fraction(v))) for i, v in enumerate(f.arc_values)]
    cands += [(abs(p.sigma), Witness("root", i, Fraction(p.sigma)))
              for i, p in enumerate(f.point_values)]
    return _best(cands)


def g4_lower_bound(f):
    """Largest ``ceil(|σ̄| / 2)`` over all abscissas, with a witness."""
    cands = [(math.ceil(Fraction(abs(v), 2)), Witness("arc", i, Fraction(v)))
             for i, v in enumerate(f.arc_values)]
    for i in range(len(f.jumps)):
        mean = Fraction(f.arc_values[i] + f.arc_values[i + 1], 2)
        cands.append((math.ceil(abs(mean) / 2), Witness("root", i, mean)))
    return _best(cands)


VERDICT_KEYS = ("gds_lower<=gds", "g4_lower<=g4", "2g4<=gds", "gds<=2g3", "gds_lower<=2g3")


def verdicts(gds_lower, g4_lower, meta):
    """Consistency of the computed bounds against table values.

    Each entry is ``True``, ``False`` (violation) or ``None`` (data missing).
    """
    meta = meta or {}
    g3, g4, gds = meta.get("g3"), meta.get("g4"), meta.get("gds")

    def check(*vals, rel):
        return None if any(v is None for v in vals) else rel(*vals)

    return {
        "gds_lower<=gds": check(gds, rel=lambda d: gds_lower <= d),
        "g4_lower<=g4": check(g4, rel=lambda a: g4_lower <= a),
        "2g4<=gds": check(g4, gds, rel=lambda a, d: 2 * a <= d),
        "gds<=2g3": check(gds, g3, rel=lambda d, b: d <= 2 * b),
        "gds_lower<=2g3": check(g3, rel=lambda b: gds_lower <= 2 * b),
    }


def _verdict_word(v):
    return "n/a" if v is None else ("ok" if v else "VIOLATED")


@dataclass(frozen=True)
class BoundsReport:
    name: str
    gds_lower: int
    gds_witness: Witness
    g4_lower: int
    g4_witness: Witness
    function: object = field(repr=False, compare=False)
    metadata: dict = field(default=None)
    verdicts: dict = field(default=None)

    @property
    def consistent(self):
        return not any(v is False for v in (self.verdicts or {}).values())

    def to_dict(self):
        f = self.function
        return {
            "name": self.name,
            "gds_lower": self.gds_lower,
            "gds_witness": self.gds_witness.to_dict(f),
            "g4_lower": self.g4_lower,
            "g4_witness": self.g4_witness.to_dict(f),
            "metadata": dict(self.metadata) if self.metadata else None,
            "verdicts": {k: _verdict_word(v) for k, v in (self.verdicts or {}).items()},
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def tsv_line(self):
        f = self.function
        v = ",".join(f"{k}={_verdict_word(x)}" for k, x in (self.verdicts or {}).items())
        return "\t".join([self.name, str(self.gds_lower), str(self.g4_lower),
                          self.gds_witness.describe(f), self.g4_witness.describe(f), v or "-"])


TSV_HEADER = "name\tgds_lower\tg4_lower\tgds_witness\tg4_witness\tverdicts"


def report_from_function(f, name="", metadata=None):
    gds, gw = gds_lower_bound(f)
    g4, g4w = g4_lower_bound(f)
    meta = {k: v for k, v in (metadata or {}).items() if v is not None} or None
    return BoundsReport(name, gds, gw, g4, g4w, f, meta, verdicts(gds, g4, meta))


def bounds_report(V, metadata=None, name=""):
    """Signature function plus both bounds, checked against optional ``{g3, g4, gds}``."""
    V = validate(V)
    try:
        f = signature_function(V)
    except Exception as exc:
        raise BoundsError(f"{name or 'knot'}: {exc}") from exc
    return report_from_function(f, name, metadata)
