"""JSON (de)serialization of descriptors, sequences and truncations.

The CLI config format: spaces are nested tagged objects, e.g.
``{"kind": "lorentz", "phi": {"kind": "power", "alpha": 0.5}}``, sequences
are ``{"prefix": [...], "tail": {"kind": "power", "c": 1.0, "alpha": 0.5}}``.
Round-trips are exact for everything that carries no Python callables.
"""

from __future__ import annotations

import math

from .errors import DescriptorError
from .orlicz import (ExponentRule, OrliczFunction, conjugate_function,
                     mtilde_function, power_function)
from .seqspec import (AlternatingTail, ConstPlusPowerTail, PowerTail,
                      PowLogTail, SequenceSpec, TailRule, Truncation, ZERO,
                      ZeroTail)
from .spaces import (C0, Cesaro, ConcaveWeight, LInfty, LorentzSp, Lp,
                     MarcinkiewiczSp, MusielakOrlicz, NakanoSp, OrliczSp,
                     PowerWeight, SpaceDescriptor, Symmetrized, Tandori,
                     Weighted)


# -- sequences --------------------------------------------------------------

def tail_to_json(tail: TailRule) -> dict:
    if isinstance(tail, ZeroTail):
        return {"kind": "zero"}
    if isinstance(tail, PowerTail):
        out = {"kind": "power", "c": tail.c, "alpha": tail.alpha}
        if tail.shift:
            out["shift"] = tail.shift
        return out
    if isinstance(tail, PowLogTail):
        return {"kind": "powlog", "c": tail.c, "a": tail.a}
    if isinstance(tail, ConstPlusPowerTail):
        return {"kind": "const-plus-power", "c0": tail.c0, "c": tail.c,
                "alpha": tail.alpha}
    if isinstance(tail, AlternatingTail):
        return {"kind": "alternating", "base": tail.base, "amp": tail.amp}
    raise DescriptorError(f"tail rule {type(tail).__name__} not serializable")


def tail_from_json(obj: dict | None) -> TailRule:
    if obj is None:
        return ZERO
    kind = obj.get("kind", "zero")
    if kind == "zero":
        return ZERO
    if kind == "power":
        if obj["alpha"] <= 0.0 and obj.get("c", 0.0) != 0.0:
            raise DescriptorError("user power tails need alpha > 0")
        return PowerTail(float(obj["c"]), float(obj["alpha"]),
                         int(obj.get("shift", 0)))
    if kind == "powlog":
        return PowLogTail(float(obj["c"]), float(obj["a"]))
    if kind == "const-plus-power":
        return ConstPlusPowerTail(float(obj["c0"]), float(obj["c"]),
                                  float(obj["alpha"]))
    if kind == "alternating":
        return AlternatingTail(float(obj["base"]), float(obj["amp"]))
    raise DescriptorError(f"unknown tail kind {kind!r}")


def sequence_to_json(x: SequenceSpec) -> dict:
    out = {"prefix": list(x.prefix), "tail": tail_to_json(x.tail)}
    if x.tail_majorant is not None:
        out["tail_majorant"] = tail_to_json(x.tail_majorant)
    return out


def sequence_from_json(obj: dict) -> SequenceSpec:
    maj = obj.get("tail_majorant")
    return SequenceSpec(tuple(float(v) for v in obj.get("prefix", ())),
                        tail_from_json(obj.get("tail")),
                        tail_from_json(maj) if maj is not None else None)


# -- weights and functions ---------------------------------------------------

def phi_to_json(phi: ConcaveWeight) -> dict:
    if not phi.is_power:
        raise DescriptorError("custom weights are not serializable")
    return {"kind": "power", "alpha": phi.alpha}


def phi_from_json(obj: dict) -> ConcaveWeight:
    if obj.get("kind") != "power":
        raise DescriptorError(f"unknown weight kind {obj.get('kind')!r}")
    return ConcaveWeight.power(float(obj["alpha"]))


def orlicz_to_json(m: OrliczFunction) -> dict:
    if m.kind == "power":
        return {"kind": "power", "p": m.param}
    if m.kind in ("mtilde", "mconj"):
        return {"kind": m.kind}
    raise DescriptorError("custom Orlicz functions are not serializable")


def orlicz_from_json(obj: dict) -> OrliczFunction:
    kind = obj.get("kind")
    if kind == "power":
        return power_function(float(obj["p"]))
    if kind == "mtilde":
        return mtilde_function()
    if kind == "mconj":
        return conjugate_function()
    raise DescriptorError(f"unknown Orlicz kind {kind!r}")


def exponents_to_json(ps: ExponentRule) -> dict:
    tail = "inf" if math.isinf(ps.tail) else ps.tail
    return {"head": list(ps.head), "tail": tail}


def exponents_from_json(obj: dict) -> ExponentRule:
    tail = obj.get("tail", 2.0)
    tail = math.inf if tail in ("inf", None) else float(tail)
    return ExponentRule(tuple(float(v) for v in obj.get("head", ())), tail)


# -- spaces -------------------------------------------------------------------

def space_to_json(space: SpaceDescriptor) -> dict:
    if isinstance(space, Lp):
        return {"kind": "lp", "p": "inf" if math.isinf(space.p) else space.p}
    if isinstance(space, C0):
        return {"kind": "c0"}
    if isinstance(space, LInfty):
        return {"kind": "linf"}
    if isinstance(space, Weighted):
        return {"kind": "weighted", "base": space_to_json(space.base),
                "weight": {"c": space.weight.c, "expo": space.weight.expo}}
    if isinstance(space, OrliczSp):
        return {"kind": "orlicz", "function": orlicz_to_json(space.m)}
    if isinstance(space, NakanoSp):
        return {"kind": "nakano", "exponents": exponents_to_json(space.ps)}
    if isinstance(space, MusielakOrlicz):
        fam = space.family
        if fam.nakano is not None:
            return {"kind": "nakano", "exponents": exponents_to_json(fam.nakano)}
        return {"kind": "orlicz", "function": orlicz_to_json(fam.orlicz)}
    if isinstance(space, LorentzSp):
        return {"kind": "lorentz", "phi": phi_to_json(space.phi)}
    if isinstance(space, MarcinkiewiczSp):
        return {"kind": "marcinkiewicz", "phi": phi_to_json(space.phi)}
    if isinstance(space, Symmetrized):
        out = {"kind": "symmetrized", "base": space_to_json(space.base)}
        if space.weight is not None:
            out["weight"] = {"c": space.weight.c, "expo": space.weight.expo}
        return out
    if isinstance(space, Cesaro):
        return {"kind": "cesaro", "base": space_to_json(space.base)}
    if isinstance(space, Tandori):
        return {"kind": "tandori", "base": space_to_json(space.base)}
    raise DescriptorError(f"{type(space).__name__} not serializable")


def space_from_json(obj: dict) -> SpaceDescriptor:
    kind = obj.get("kind")
    if kind == "lp":
        p = obj["p"]
        return Lp(math.inf if p in ("inf", None) else float(p))
    if kind == "c0":
        return C0()
    if kind == "linf":
        return LInfty()
    if kind == "weighted":
        w = obj["weight"]
        return Weighted(space_from_json(obj["base"]),
                        PowerWeight(float(w.get("c", 1.0)), float(w["expo"])))
    if kind == "orlicz":
        return OrliczSp(orlicz_from_json(obj["function"]))
    if kind == "nakano":
        return NakanoSp(exponents_from_json(obj["exponents"]))
    if kind == "lorentz":
        return LorentzSp(phi_from_json(obj["phi"]))
    if kind == "marcinkiewicz":
        return MarcinkiewiczSp(phi_from_json(obj["phi"]))
    if kind == "symmetrized":
        w = obj.get("weight")
        return Symmetrized(space_from_json(obj["base"]),
                           PowerWeight(float(w.get("c", 1.0)),
                                       float(w["expo"])) if w else None)
    if kind == "cesaro":
        return Cesaro(space_from_json(obj["base"]))
    if kind == "tandori":
        return Tandori(space_from_json(obj["base"]))
    raise DescriptorError(f"unknown space kind {kind!r}")


def truncation_from_json(obj: dict | None) -> Truncation:
    if obj is None:
        return Truncation()
    return Truncation(int(obj.get("n", 2 ** 14)),
                      str(obj.get("policy", "certified")))


def truncation_to_json(trunc: Truncation) -> dict:
    return {"n": trunc.n, "policy": trunc.policy}
