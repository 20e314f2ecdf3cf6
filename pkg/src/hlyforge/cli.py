"""
Command-line front end and the JSON presentation format.

A presentation file looks like

    {"format_version": "1",
     "field": "rational",            # or {"gf": 5}
     "blocks": {
        "algebra": {"kind": "hom_lie", "dim": 3,
                    "alpha": [[0, 0, 1, 1], ...],
                    "bracket": [[0, 1, 2, 1, 1], [1, 0, 2, -1, 1]]}}}

Tensors are sparse lists of ``[indices..., numerator, denominator]``; a
k-ary bracket on dim n has indices (i_1..i_k, output).  Matrices use
``[row, col, num, den]`` and act on column vectors.

Exit codes: 0 ok / constructed, 1 identity failure, 2 input error.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact_core import GF, QQ, PreconditionError

FORMAT_VERSION = "1"


class InputError(ValueError):
    """Malformed presentation or command line; maps to exit code 2."""


# block kinds: tensor fields with their shapes in terms of the block's size fields
KINDS = {
    "hom_lie": (("dim",), {"alpha": ("dim", "dim"), "bracket": ("dim", "dim", "dim")}),
    "hly": (("dim",), {"alpha": ("dim", "dim"), "binary": ("dim", "dim", "dim"),
                       "ternary": ("dim", "dim", "dim", "dim")}),
    "hom_lie_rep": (("dim", "carrier_dim"),
                    {"beta": ("carrier_dim", "carrier_dim"),
                     "rho": ("dim", "carrier_dim", "carrier_dim")}),
    "hly_rep": (("dim", "carrier_dim"),
                {"beta": ("carrier_dim", "carrier_dim"),
                 "rho": ("dim", "carrier_dim", "carrier_dim"),
                 "theta": ("dim", "dim", "carrier_dim", "carrier_dim")}),
    "cocycle": (("dim", "carrier_dim"),
                {"F": ("dim", "dim", "carrier_dim"),
                 "G": ("dim", "dim", "dim", "carrier_dim")}),
    "matrix": (("rows", "cols"), {"matrix": ("rows", "cols")}),
    "deformation": (("rows", "cols", "order"), {}),
    "ns_lie": (("dim",), {"alpha": ("dim", "dim"), "circ": ("dim", "dim", "dim"),
                          "vee": ("dim", "dim", "dim")}),
    "ns_hly": (("dim",), {"alpha": ("dim", "dim"), "circ": ("dim", "dim", "dim"),
                          "vee": ("dim", "dim", "dim"), "curly": ("dim",) * 4,
                          "square": ("dim",) * 4}),
    "weights": ((), {}),
}
OPTIONAL = {("cocycle", "G")}
SCALARS = {"weights": ("lam", "mu")}


@dataclass(frozen=True)
class Block:
    kind: str
    sizes: dict
    tensors: dict          # name -> ndarray, or for deformations "coefficients" -> tuple
    scalars: dict


@dataclass(frozen=True)
class Presentation:
    field: object
    blocks: dict
    format_version: str = FORMAT_VERSION


# parsing

def _field_from_json(spec, where="field"):
    if spec == "rational":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"gf"} and isinstance(spec["gf"], int):
        try:
            return GF(spec["gf"])
        except ValueError as e:
            raise InputError("%s: %s" % (where, e))
    raise InputError("%s: expected \"rational\" or {\"gf\": p}, got %r" % (where, spec))


def _field_to_json(field):
    return "rational" if field.p is None else {"gf": field.p}


def _number(num, den, field, where):
    if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) \
            or isinstance(den, bool):
        raise InputError("%s: numerator and denominator must be integers" % where)
    if den == 0:
        raise InputError("%s: denominator 0" % where)
    if field.p is not None:
        if den != 1:
            raise InputError("%s: denominator must be 1 over GF(%d)" % (where, field.p))
        return field.scalar(num)
    return field.scalar(Fraction(num, den))


def _parse_tensor(entries, shape, field, where):
    if not isinstance(entries, list):
        raise InputError("%s: expected a list of entries" % where)
    t = field.zeros(shape)
    seen = set()
    for k, e in enumerate(entries):
        w = "%s[%d]" % (where, k)
        if not isinstance(e, list) or len(e) != len(shape) + 2:
            raise InputError("%s: expected %d indices plus numerator and denominator"
                             % (w, len(shape)))
        idx = e[:len(shape)]
        for i, (v, n) in enumerate(zip(idx, shape)):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InputError("%s: index %d = %r out of range 0..%d" % (w, i, v, n - 1))
        if tuple(idx) in seen:
            raise InputError("%s: repeated index %s" % (w, idx))
        seen.add(tuple(idx))
        t[tuple(idx)] = _number(e[-2], e[-1], field, w)
    return t


def _parse_scalar(v, field, where):
    if not isinstance(v, list) or len(v) != 2:
        raise InputError("%s: expected [numerator, denominator]" % where)
    return _number(v[0], v[1], field, where)


def _parse_block(name, data, field, strict_keys):
    where = "blocks.%s" % name
    if not isinstance(data, dict) or "kind" not in data:
        raise InputError("%s: expected an object with a \"kind\"" % where)
    kind = data["kind"]
    if kind not in KINDS:
        raise InputError("%s.kind: unknown kind %r (known: %s)"
                         % (where, kind, ", ".join(sorted(KINDS))))
    size_keys, fields = KINDS[kind]
    sizes = {}
    for s in size_keys:
        v = data.get(s)
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InputError("%s.%s: expected a non-negative integer" % (where, s))
        sizes[s] = v
    allowed = {"kind"} | set(size_keys) | set(fields) | set(SCALARS.get(kind, ()))
    if kind == "deformation":
        allowed.add("coefficients")
    extra = set(data) - allowed
    if extra and strict_keys:
        raise InputError("%s: unknown key(s) %s" % (where, ", ".join(sorted(extra))))
    tensors = {}
    for fname, dims in fields.items():
        if fname not in data:
            if (kind, fname) in OPTIONAL:
                continue
            raise InputError("%s: missing %r" % (where, fname))
        shape = tuple(sizes[d] for d in dims)
        tensors[fname] = _parse_tensor(data[fname], shape, field, "%s.%s" % (where, fname))
    if kind == "deformation":
        coeffs = data.get("coefficients")
        if not isinstance(coeffs, list) or len(coeffs) != sizes["order"] + 1:
            raise InputError("%s.coefficients: expected order + 1 = %d sparse matrices"
                             % (where, sizes["order"] + 1))
        tensors["coefficients"] = tuple(
            _parse_tensor(c, (sizes["rows"], sizes["cols"]), field,
                          "%s.coefficients[%d]" % (where, k)) for k, c in enumerate(coeffs))
    scalars = {}
    for s in SCALARS.get(kind, ()):
        if s not in data:
            raise InputError("%s: missing %r" % (where, s))
        scalars[s] = _parse_scalar(data[s], field, "%s.%s" % (where, s))
    return Block(kind, sizes, tensors, scalars)


def parse_text(text, strict_keys=True, field=None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("malformed JSON at line %d column %d: %s" % (e.lineno, e.colno, e.msg))
    if not isinstance(doc, dict):
        raise InputError("top level must be an object")
    extra = set(doc) - {"format_version", "field", "blocks"}
    if extra and strict_keys:
        raise InputError("unknown top-level key(s) %s" % ", ".join(sorted(extra)))
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise InputError("format_version: unsupported %r" % (version,))
    declared = _field_from_json(doc["field"]) if "field" in doc else None
    if field is not None and declared is not None and field != declared:
        raise InputError("field: file declares %s but %s was requested" % (declared, field))
    fld = field or declared or QQ
    blocks = doc.get("blocks", {})
    if not isinstance(blocks, dict):
        raise InputError("blocks: expected an object")
    return Presentation(fld, {k: _parse_block(k, v, fld, strict_keys) for k, v in blocks.items()},
                        version)


def parse(path, strict_keys=True, field=None):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e.strerror))
    return parse_text(text, strict_keys, field)


# serialization

def _json_number(v, field):
    v = field.canonical(v)
    if isinstance(v, Fraction):
        return [v.numerator, v.denominator]
    return [int(v), 1]


def _sparse(t, field):
    t = np.asarray(t)
    nz = field.nonzero(t)
    out = []
    for idx in zip(*np.nonzero(nz)):
        out.append([int(i) for i in idx] + _json_number(t[idx], field))
    out.sort()
    return out


def block_to_json(b, field):
    d = {"kind": b.kind}
    d.update(b.sizes)
    for name, t in b.tensors.items():
        if name == "coefficients":
            d[name] = [_sparse(c, field) for c in t]
        else:
            d[name] = _sparse(t, field)
    for name, v in b.scalars.items():
        d[name] = _json_number(v, field)
    return d


def serialize(p):
    """Canonical text: sorted keys, sorted entries, one trailing newline."""
    doc = {"format_version": p.format_version, "field": _field_to_json(p.field),
           "blocks": {k: block_to_json(b, p.field) for k, b in p.blocks.items()}}
    return _dumps(doc, 0) + "\n"


def _dumps(v, depth):
    # objects and entry lists are broken over lines; each entry stays on one line
    pad, inner = " " * depth, " " * (depth + 1)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = ["%s%s: %s" % (inner, json.dumps(k), _dumps(v[k], depth + 1)) for k in sorted(v)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, list) and v and all(isinstance(e, list) for e in v):
        return "[\n" + ",\n".join(inner + _dumps(e, depth + 1) for e in v) + "\n" + pad + "]"
    return json.dumps(v)


# conversions between blocks and engine objects

def block_from(obj, field):
    """Block for an engine object (algebra, rep, pair, matrix or NS algebra).

    ``("deformation", [T0, T1, ...])`` and ``("weights", lam, mu)`` give the
    two kinds that have no engine class.
    """
    from .cohomology import CocyclePair
    from .ns_algebras import NSHLY, NSHomLie
    from .representations import HLYRep, HomLieRep
    from .structures import HLYAlgebra, HomLieAlgebra
    if isinstance(obj, HomLieAlgebra):
        return Block("hom_lie", {"dim": obj.dim}, {"alpha": obj.alpha, "bracket": obj.bracket}, {})
    if isinstance(obj, HLYAlgebra):
        return Block("hly", {"dim": obj.dim},
                     {"alpha": obj.alpha, "binary": obj.binary, "ternary": obj.ternary}, {})
    if isinstance(obj, HLYRep):
        return Block("hly_rep", {"dim": obj.rho.shape[0], "carrier_dim": obj.carrier_dim},
                     {"beta": obj.beta, "rho": obj.rho, "theta": obj.theta}, {})
    if isinstance(obj, HomLieRep):
        return Block("hom_lie_rep", {"dim": obj.rho.shape[0], "carrier_dim": obj.carrier_dim},
                     {"beta": obj.beta, "rho": obj.rho}, {})
    if isinstance(obj, CocyclePair):
        n, m = obj.F.shape[0], obj.F.shape[-1]
        return Block("cocycle", {"dim": n, "carrier_dim": m}, {"F": obj.F, "G": obj.G}, {})
    if isinstance(obj, NSHLY):
        return Block("ns_hly", {"dim": obj.dim},
                     {"alpha": obj.alpha, "circ": obj.circ, "vee": obj.vee,
                      "curly": obj.curly, "square": obj.square}, {})
    if isinstance(obj, NSHomLie):
        return Block("ns_lie", {"dim": obj.dim},
                     {"alpha": obj.alpha, "circ": obj.circ, "vee": obj.vee}, {})
    if isinstance(obj, tuple) and obj and obj[0] == "deformation":
        cs = tuple(field.array(c) for c in obj[1])
        return Block("deformation", {"rows": cs[0].shape[0], "cols": cs[0].shape[1],
                                     "order": len(cs) - 1}, {"coefficients": cs}, {})
    if isinstance(obj, tuple) and obj and obj[0] == "weights":
        return Block("weights", {}, {}, {"lam": field.scalar(obj[1]), "mu": field.scalar(obj[2])})
    m = field.array(obj)
    if m.ndim == 2:
        return Block("matrix", {"rows": m.shape[0], "cols": m.shape[1]}, {"matrix": m}, {})
    raise TypeError("no block form for %r" % type(obj))


def to_object(b, field):
    from .ns_algebras import NSHLY, NSHomLie
    from .representations import HLYRep, HomLieRep
    from .structures import HLYAlgebra, HomLieAlgebra
    t = b.tensors
    if b.kind == "hom_lie":
        return HomLieAlgebra(t["alpha"], t["bracket"], field)
    if b.kind == "hly":
        return HLYAlgebra(t["alpha"], t["binary"], t["ternary"], field)
    if b.kind == "hom_lie_rep":
        return HomLieRep(t["beta"], t["rho"], field)
    if b.kind == "hly_rep":
        return HLYRep(t["beta"], t["rho"], t["theta"], field)
    if b.kind == "matrix":
        return t["matrix"]
    if b.kind == "ns_lie":
        return NSHomLie(t["alpha"], t["circ"], t["vee"], field)
    if b.kind == "ns_hly":
        return NSHLY(t["alpha"], t["circ"], t["vee"], t["curly"], t["square"], field)
    if b.kind == "cocycle":
        return t
    if b.kind == "deformation":
        return t["coefficients"]
    if b.kind == "weights":
        return b.scalars["lam"], b.scalars["mu"]
    raise InputError("cannot use a %r block here" % b.kind)


def presentation(field, **objects):
    return Presentation(field, {k: block_from(v, field) for k, v in objects.items()})


def write_shipped(directory):
    """Write every shipped fixture as canonical JSON; returns the paths."""
    import os
    from .fixtures import shipped
    paths = []
    for name, (field, objs) in sorted(shipped().items()):
        path = os.path.join(directory, name + ".json")
        with open(path, "w") as fh:
            fh.write(serialize(presentation(field, **objs)))
        paths.append(path)
    return paths


def shipped_paths():
    """Paths of the fixture files installed with the package."""
    from importlib import resources
    root = resources.files("hlyforge") / "data"
    return sorted(str(p) for p in root.iterdir() if p.name.endswith(".json"))


# role lookup

def _role(p, role, kinds, required=True):
    """The block named ``role``, else the single block of one of ``kinds``."""
    if role in p.blocks:
        b = p.blocks[role]
        if b.kind not in kinds:
            raise InputError("block %r has kind %r, expected %s" % (role, b.kind, " or ".join(kinds)))
        return b
    cands = [b for b in p.blocks.values() if b.kind in kinds]
    if len(cands) == 1:
        return cands[0]
    if not required and not cands:
        return None
    if not cands:
        raise InputError("no %r block (kind %s)" % (role, " or ".join(kinds)))
    raise InputError("several blocks of kind %s; name the one to use %r" % (" or ".join(kinds), role))


def _algebra(p, kinds=("hom_lie", "hly")):
    return to_object(_role(p, "algebra", kinds), p.field)


def _hly_algebra(p):
    from .structures import HomLieAlgebra, as_hly
    A = _algebra(p)
    return as_hly(A) if isinstance(A, HomLieAlgebra) else A


def _cocycle(p, n, m, need_g=True):
    b = _role(p, "cocycle", ("cocycle",), required=False)
    f = p.field
    if b is None:
        return f.zeros((n, n, m)), f.zeros((n, n, n, m))
    F = b.tensors["F"]
    G = b.tensors.get("G")
    if G is None:
        G = f.zeros((n, n, n, m))
    return F, G


def _context(p, check=True):
    from .representations import context
    H = _hly_algebra(p)
    R = to_object(_role(p, "rep", ("hly_rep",)), p.field)
    F, G = _cocycle(p, H.dim, R.carrier_dim)
    return context(H, R, F, G, check=check)


def _operator(p, role="operator"):
    return to_object(_role(p, role, ("matrix",)), p.field)


def _weights(p):
    b = _role(p, "weights", ("weights",), required=False)
    return (0, 0) if b is None else (b.scalars["lam"], b.scalars["mu"])


# commands

def _verify(kind, p, opts):
    from . import cohomology as co, ns_algebras as ns, operators as op
    from . import representations as rp, structures as st
    cap, strict = opts.max_failures, opts.strict
    if kind == "hom-lie":
        return st.verify_hom_lie(_algebra(p, ("hom_lie",)), cap)
    if kind == "hly":
        return st.verify_hly(_hly_algebra(p), cap)
    if kind == "rep":
        A = _algebra(p)
        rb = _role(p, "rep", ("hly_rep", "hom_lie_rep"))
        R = to_object(rb, p.field)
        if rb.kind == "hom_lie_rep":
            return rp.verify_hom_lie_rep(A, R, cap)
        H = st.as_hly(A) if isinstance(A, st.HomLieAlgebra) else A
        return rp.verify_hly_rep(H, R, strict=strict, cap=cap)
    if kind == "cocycle2":
        L = _algebra(p, ("hom_lie",))
        R = to_object(_role(p, "rep", ("hom_lie_rep",)), p.field)
        return co.verify_2cocycle_hom_lie(_role(p, "cocycle", ("cocycle",)).tensors["F"], L, R, cap)
    if kind == "cocycle23":
        H = _hly_algebra(p)
        R = to_object(_role(p, "rep", ("hly_rep",)), p.field)
        F, G = _cocycle(p, H.dim, R.carrier_dim)
        return co.verify_23cocycle(co.CocyclePair(F, G), H, R, strict=strict, cap=cap)
    if kind == "rota-baxter":
        return op.verify_rota_baxter(_operator(p), _algebra(p), cap)
    if kind == "reynolds":
        lam, mu = _weights(p)
        return op.verify_weighted_reynolds(_operator(p), lam, mu, _algebra(p), cap)
    if kind == "twisted-op":
        ctx = _context(p, check=False)
        rp.validate_context(ctx, strict=strict)
        return op.verify_twisted_op(_operator(p), ctx, cap, check_context=False)
    if kind == "ns-lie":
        return ns.verify_ns_hom_lie(to_object(_role(p, "ns", ("ns_lie",)), p.field),
                                    strict=strict, cap=cap)
    if kind == "ns-hly":
        return ns.verify_ns_hly(to_object(_role(p, "ns", ("ns_hly",)), p.field),
                                strict=strict, cap=cap)
    raise InputError("unknown verify target %r" % kind)


def _construct(kind, p, opts):
    from . import cohomology as co, ns_algebras as ns, operators as op
    from . import representations as rp, structures as st
    f = p.field
    if kind == "induced-hly":
        return {"algebra": st.induced_hly_from_hom_lie(_algebra(p, ("hom_lie",)))}
    if kind == "yau-twist":
        return {"algebra": st.yau_twist(_algebra(p), _operator(p, "morphism"))}
    if kind == "semidirect":
        H = _hly_algebra(p)
        R = to_object(_role(p, "rep", ("hly_rep",)), f)
        return {"algebra": rp.semidirect(H, R, strict=opts.strict)}
    if kind == "twisted-semidirect":
        H = _hly_algebra(p)
        R = to_object(_role(p, "rep", ("hly_rep",)), f)
        F, G = _cocycle(p, H.dim, R.carrier_dim)
        return {"algebra": rp.twisted_semidirect(H, R, F, G, strict=opts.strict)}
    if kind == "descendent":
        lam, mu = _weights(p)
        return {"algebra": op.reynolds_descendent(_operator(p), lam, mu, _algebra(p))}
    if kind == "v-structure":
        return {"algebra": op.v_structure(_operator(p), _context(p))}
    if kind == "induced-rep":
        ctx, T = _context(p), _operator(p)
        return {"algebra": op.v_structure(T, ctx), "rep": rp.induced_rep_from_top(T, ctx)}
    if kind == "ns-from-top":
        return {"ns": ns.ns_from_twisted_op(_operator(p), _context(p))}
    if kind == "ns-from-reynolds":
        lam, mu = _weights(p)
        return {"ns": ns.ns_from_reynolds(_operator(p), lam, mu, _algebra(p))}
    if kind == "subadjacent":
        H, R = ns.subadjacent_hly(to_object(_role(p, "ns", ("ns_hly",)), f))
        return {"algebra": H, "rep": R}
    if kind == "adjacent":
        return {"algebra": ns.adjacent_hom_lie(to_object(_role(p, "ns", ("ns_lie",)), f))}
    if kind == "ns-from-ns-lie":
        return {"ns": ns.ns_hly_from_ns_lie(to_object(_role(p, "ns", ("ns_lie",)), f))}
    if kind == "g-from-f":
        L = _algebra(p, ("hom_lie",))
        R = to_object(_role(p, "rep", ("hom_lie_rep",)), f)
        H, Rt, pair = co.hom_lie_pair(_role(p, "cocycle", ("cocycle",)).tensors["F"], L, R)
        return {"algebra": H, "rep": Rt, "cocycle": pair}
    raise InputError("unknown construct target %r" % kind)


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def run(argv=None, out=None):
    """Run one command; returns the exit code and writes JSON to ``out``."""
    out = sys.stdout if out is None else out
    parser = _parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        field = _field_flag(opts.field)
        p = parse(opts.file, field=field)
        return _dispatch(opts, p, out)
    except PreconditionError as e:
        if e.report is None:
            # budget or field restrictions: nothing was verified
            _emit({"error": str(e), "kind": "input"}, out)
            return 2
        _emit({"error": str(e), "kind": "precondition", "report": e.report.to_json()}, out)
        return 1
    except ValueError as e:
        # InputError, DimensionError and FieldMismatch are all ValueErrors
        _emit({"error": str(e), "kind": "input"}, out)
        return 2


def _field_flag(s):
    if s is None:
        return None
    if s in ("rational", "qq"):
        return QQ
    if s.startswith("gf:"):
        try:
            return GF(int(s[3:]))
        except ValueError as e:
            raise InputError("--field: %s" % e)
    raise InputError("--field: expected gf:p or rational, got %r" % s)


def _dispatch(opts, p, out):
    from .cohomology import cohomology_dims
    from .deformations import deformation, infinitesimal_is_cocycle, verify_deformation
    from .operators import search_twisted_ops
    if opts.command == "verify":
        rep = _verify(opts.target, p, opts)
        _emit(rep.to_json(), out)
        return 0 if rep.ok else 1
    if opts.command == "construct":
        objs = _construct(opts.target, p, opts)
        out.write(serialize(presentation(p.field, **objs)))
        return 0
    if opts.command == "cohomology":
        H = _hly_algebra(p)
        R = to_object(_role(p, "rep", ("hly_rep",)), p.field)
        d = cohomology_dims(opts.level, H, R)
        _emit({k: (bool(v) if isinstance(v, (bool, np.bool_)) else v) for k, v in d.items()}, out)
        return 0
    if opts.command == "search":
        ctx = _context(p)
        for T in search_twisted_ops(ctx, opts.budget):
            _emit(block_to_json(block_from(T, p.field), p.field), out)
        return 0
    if opts.command == "deform":
        ctx = _context(p)
        coeffs = to_object(_role(p, "deformation", ("deformation",)), p.field)
        order = len(coeffs) - 1 if opts.order is None else opts.order
        d = deformation(list(coeffs)[:order + 1], ctx, order)
        rep = verify_deformation(d, opts.max_failures)
        doc = {"orders": {}}
        for s in range(d.order + 1):
            tag = "order%d." % s
            doc["orders"][str(s)] = {k[len(tag):]: v for k, v in rep.counts.items()
                                     if k.startswith(tag)}
        doc["ok"] = rep.ok
        doc["report"] = rep.to_json()
        if rep.ok and d.order >= 1:
            doc["infinitesimal_is_cocycle"] = infinitesimal_is_cocycle(d)[0]
        _emit(doc, out)
        return 0 if rep.ok else 1
    raise InputError("unknown command %r" % opts.command)


VERIFY_TARGETS = ("hom-lie", "hly", "rep", "cocycle2", "cocycle23", "rota-baxter", "reynolds",
                  "twisted-op", "ns-lie", "ns-hly")
CONSTRUCT_TARGETS = ("induced-hly", "yau-twist", "semidirect", "twisted-semidirect",
                     "descendent", "v-structure", "induced-rep", "ns-from-top",
                     "ns-from-reynolds", "subadjacent", "adjacent", "ns-from-ns-lie",
                     "g-from-f")


def _common(top):
    # flags are accepted before or after the subcommand; only the top level sets defaults
    kw = {} if top else {"default": argparse.SUPPRESS}
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", help="gf:p or rational; must agree with the file",
                   **({"default": None} if top else kw))
    p.add_argument("--strict", action="store_true",
                   help="use the literal variants of the flagged formulas", **kw)
    p.add_argument("--max-failures", type=int, metavar="K",
                   **({"default": None} if top else kw))
    return p


def _parser():
    common = _common(False)
    parser = argparse.ArgumentParser(prog="hly-forge", parents=[_common(True)],
                                     description="Exact checks for Hom-Lie-Yamaguti structures.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("file")
    c = sub.add_parser("construct", parents=[common])
    c.add_argument("target", choices=CONSTRUCT_TARGETS)
    c.add_argument("file")
    h = sub.add_parser("cohomology", parents=[common])
    h.add_argument("file")
    h.add_argument("--level", type=int, default=0)
    s = sub.add_parser("search", parents=[common])
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=None)
    d = sub.add_parser("deform", parents=[common])
    d.add_argument("file")
    d.add_argument("--order", type=int, default=None)
    return parser


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
