"""Command-line front end: ``hopf72 <command> -a p/q,p/q,p/q [options]``."""

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .symgroup import ParamVector, Perm, classify_regime, linkage_classes, parse_scalar

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    params: ParamVector
    command: str
    g: Perm = None
    variant: str = "A"
    seed: int = 0
    out: str = None
    degree_bound: int = 6
    as_json: bool = True
    as_dot: bool = False
    failures: list = field(default_factory=list)

    @property
    def n(self):
        return self.params.n

    def fail(self, what):
        self.failures.append(what)


def parse_params(text):
    parts = text.split(",")
    try:
        vals = [parse_scalar(p) for p in parts]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    n = {3: 3, 6: 4, 10: 5}.get(len(vals))
    if n is None:
        raise UsageError(f"-a needs 3 entries (n=3), 6 (n=4) or 10 (n=5); got {len(vals)}")
    total = sum(vals)
    if total != 0:
        raise UsageError(f"parameters must sum to zero, got sum {total}; "
                         f"for instance replace the last entry by {vals[-1] - total}")
    return ParamVector(vals, n)


def parse_perm(text, n=3):
    try:
        return Perm.parse(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require_n3(cfg):
    if cfg.n != 3:
        raise UsageError(f"command {cfg.command!r} is only available for n = 3")


def _ok(cfg, flag, what):
    if not flag:
        cfg.fail(what)
    return flag


# ---------------------------------------------------------------- commands

def cmd_build(cfg):
    from .presentation import build_algebra, complete, relations

    if cfg.n != 3:
        rels = relations(cfg.params, cfg.n, cfg.variant)
        gb = complete(rels, cfg.n, degree_bound=cfg.degree_bound)
        by_degree = {}
        for (w, _h) in gb.rules:
            by_degree[len(w)] = by_degree.get(len(w), 0) + 1
        return {
            "schema": "hopf72/completion/1",
            "n": cfg.n,
            "variant": cfg.variant,
            "params": cfg.params.strings(),
            "relators": [r.name for r in rels],
            "degree_bound": cfg.degree_bound,
            "truncated": gb.truncated,
            "rules_by_degree": {str(k): v for k, v in sorted(by_degree.items())},
            "dimension_claimed": None,
        }
    table = build_algebra(cfg.params, cfg.variant)
    _ok(cfg, table.dim == 72, "dimension")
    _ok(cfg, table.closure_ok(), "closure")
    return table.to_json()


def cmd_verify(cfg):
    from .crosscheck import regular_action_crosscheck
    from .presentation import build_algebra, identity_checks, verify_associativity

    _require_n3(cfg)
    table = build_algebra(cfg.params, cfg.variant)
    out = {"schema": "hopf72/verify/1", "params": cfg.params.strings(), "variant": cfg.variant,
           "dimension": table.dim, "closure": table.closure_ok(), "unit": table.unit_ok()}
    out["associative"] = verify_associativity(table, "full")
    for key in ("closure", "unit", "associative"):
        _ok(cfg, out[key], key)
    _ok(cfg, table.dim == 72, "dimension")
    if cfg.variant == "K":
        from .hopf import build_K_and_M3
        rep = build_K_and_M3(cfg.params)
        out["m3"] = rep.to_json()
        _ok(cfg, rep.ok, "m3 relators")
        return out
    from .hopf import (build_coalgebra, check_antipode, check_coassociative, check_counit,
                       check_delta_multiplicative, check_s2_conjugation)
    ids = identity_checks(table)
    out["identities"] = ids
    for k, v in ids.items():
        _ok(cfg, v, f"identity {k}")
    ct = build_coalgebra(table)
    s2, s4 = check_s2_conjugation(ct)
    axioms = {
        "delta_multiplicative": check_delta_multiplicative(ct),
        "coassociative": check_coassociative(ct),
        "counit": check_counit(ct),
        "antipode": check_antipode(ct),
        "s2_is_chi_conjugation": s2,
        "s4_identity": s4,
    }
    out["hopf_axioms"] = axioms
    for k, v in axioms.items():
        _ok(cfg, v, k)
    cc = regular_action_crosscheck(table)
    out["crosscheck"] = cc.to_json()
    _ok(cfg, cc.passed, "crosscheck")
    return out


def cmd_simples(cfg):
    from .repcore import classify_simples

    _require_n3(cfg)
    sl = classify_simples(cfg.params)
    _ok(cfg, sl.wedderburn_ok, "wedderburn count")
    _ok(cfg, sl.tops_in_list, "verma tops")
    return {"schema": "hopf72/simples/1", "params": cfg.params.strings(), **sl.to_json()}


def cmd_lattice(cfg):
    from .repcore import submodule_lattice

    _require_n3(cfg)
    if cfg.g is None:
        raise UsageError("lattice needs -g <perm>")
    try:
        cert = submodule_lattice(cfg.params, cfg.g, seed=cfg.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _ok(cfg, cert.ok, "lattice")
    return cert


def cmd_integrals(cfg):
    from .hopf import build_coalgebra, integrals
    from .presentation import build_algebra

    _require_n3(cfg)
    table = build_algebra(cfg.params)
    ct = build_coalgebra(table)
    integ = integrals(table, ct)
    lab = table.basis_label

    def sp(vs):
        return [{lab(k): str(v) for k, v in enumerate(b) if v} for b in vs]

    out = {
        "schema": "hopf72/integrals/1",
        "params": cfg.params.strings(),
        "left": sp(integ.left),
        "right": sp(integ.right),
        "dual_left_dim": len(integ.dual_left),
        "dual_right_dim": len(integ.dual_right),
        "unimodular": integ.unimodular,
        "dual_unimodular": integ.dual_unimodular,
        "modular_function_trivial": integ.modular_function_trivial,
        "distinguished_grouplike": {lab(k): str(v)
                                    for k, v in sorted(integ.distinguished_grouplike.items())},
    }
    _ok(cfg, len(integ.left) == 1, "left integrals one-dimensional")
    return out


def cmd_quiver(cfg):
    from .extquiver import rep_type_verdict, separated_quiver

    _require_n3(cfg)
    v = rep_type_verdict(cfg.params)
    if cfg.as_dot:
        return separated_quiver(cfg.params, v.ext)
    return {"params": cfg.params.strings(), **v.to_json()}


def cmd_hopf_report(cfg):
    from .hopf import hopf_certificate

    _require_n3(cfg)
    rep = hopf_certificate(cfg.params)
    for k, v in rep["axioms"].items():
        _ok(cfg, v, k)
    return rep


# Expected lattices exist for these Vermas (after normalising sub-generic parameters).
_LATTICE_VERMAS = {"generic": ["e", "(13)(23)"], "sub-generic": ["e", "(12)", "(13)(23)"]}


def cmd_report(cfg):
    from .extquiver import rep_type_verdict
    from .hopf import build_K_and_M3, hopf_certificate
    from .presentation import build_algebra, identity_checks, verify_associativity
    from .repcore import classify_simples, projective_cover_report, submodule_lattice
    from .symgroup import conj_elem

    _require_n3(cfg)
    a = cfg.params
    reg = classify_regime(a)
    claims = []

    def claim(name, ok, how):
        claims.append({"claim": name, "status": "verified" if ok else "FAILED", "by": how})
        _ok(cfg, ok, name)

    table = build_algebra(a)
    claim("dimension 72", table.dim == 72 and table.closure_ok(),
          "completed rewriting system, 12 normal words times 6 weights")
    claim("associativity", verify_associativity(table, "full"), "all basis triples")
    claim("cubic identities", all(identity_checks(table).values()), "exact element equalities")
    sl = classify_simples(a)
    dims = sorted(S.dim for S in sl.simples)
    claim(f"simples of dimensions {dims}", sl.wedderburn_ok,
          f"sum of squares plus dim J = {sl.jacobson_dim} equals 72 (trace-form radical)")
    pc = projective_cover_report(a)
    claim("Verma modules are indecomposable with simple top and socle",
          all(v["indecomposable"] and v["top"] and v["socle"] for v in pc.values()),
          "local endomorphism ring, radical and socle series")
    lattices = {}
    if reg.tag in _LATTICE_VERMAS:
        theta_inv = reg.normalizer.inverse()
        for gname in _LATTICE_VERMAS[reg.tag]:
            g = conj_elem(theta_inv, Perm.parse(gname))
            cert = submodule_lattice(a, g, seed=cfg.seed)
            lattices[str(g)] = {"nodes": len(cert.nodes), "edges": len(cert.edges), "ok": cert.ok}
            claim(f"submodule lattice of M_{g}", cert.ok,
                  "exhaustive weight-pattern enumeration, families checked identically and at samples")
    v = rep_type_verdict(a)
    claim(f"representation type: {v.verdict}", True,
          "Ext^1 by cocycles and by projective resolution, Tits form of the separated quiver")
    hr = hopf_certificate(a)
    claim("Hopf axioms", all(hr["axioms"].values()), "coproduct, counit and antipode on all basis elements")
    claim("grouplikes {1, chi}", len(hr["grouplikes"]) == 2, "coradical dimension and characters of S3")
    claim("skew-primitives of dimension 2", len(hr["skew_primitives"]) == 2, "linear solve")
    claim("unimodular, dual unimodular", hr["integrals"]["unimodular"] and hr["integrals"]["dual_unimodular"],
          "integral spaces of the algebra and its dual")
    claim("no quasitriangular structure via R0", hr["qt_obstruction"]["witness"] is not None,
          "explicit witness g")
    kr = build_K_and_M3(a)
    claim("variant K has dimension 72 and the 6-dim module M3", kr.ok, "relator evaluation")
    return {
        "schema": "hopf72/report/1",
        "params": a.strings(),
        "regime": reg.tag,
        "normalizer": str(reg.normalizer),
        "linkage_classes": [[str(g) for g in c] for c in linkage_classes(a)],
        "simples": sl.names(),
        "projective_covers": pc,
        "lattices": lattices,
        "ext_matrix": v.ext.to_json(),
        "verdict": v.verdict,
        "open_questions": v.open_questions,
        "claims": claims,
    }


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "simples": cmd_simples,
    "lattice": cmd_lattice,
    "integrals": cmd_integrals,
    "quiver": cmd_quiver,
    "report": cmd_report,
    "hopf-report": cmd_hopf_report,
}


# ---------------------------------------------------------------- plumbing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser():
    p = _Parser(prog="hopf72", description="Exact computations in the 72-dimensional Hopf algebras over S3.")
    p.add_argument("--version", action="version", version=f"hopf72 {__version__}")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("-a", dest="params", required=True, metavar="p/q,p/q,p/q",
                   help="sum-zero rational parameters, ordered (a12, a13, a23) for n = 3")
    p.add_argument("-g", dest="g", metavar="PERM", help='group element in cycle notation, e.g. "(13)(23)"')
    p.add_argument("--variant", choices=["A", "K"], default="A")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="DIR", help="write the output file into DIR instead of stdout")
    p.add_argument("--degree-bound", type=int, default=6, help="completion bound for n >= 4")
    p.add_argument("--json", action="store_true", help="JSON output (default)")
    p.add_argument("--dot", action="store_true", help="DOT output (lattice, quiver)")
    return p


def config_from_args(argv):
    ns = make_parser().parse_args(argv)
    if ns.json and ns.dot:
        raise UsageError("--json and --dot are exclusive")
    if ns.dot and ns.command not in ("lattice", "quiver"):
        raise UsageError("--dot is available for lattice and quiver")
    if ns.degree_bound < 2:
        raise UsageError("--degree-bound must be at least 2")
    params = parse_params(ns.params)
    if ns.variant == "K" and ns.command not in ("build", "verify"):
        raise UsageError("--variant K is supported by build and verify")
    g = parse_perm(ns.g, params.n) if ns.g is not None else None
    random.seed(ns.seed)
    return RunConfig(params=params, command=ns.command, g=g, variant=ns.variant, seed=ns.seed,
                     out=ns.out, degree_bound=ns.degree_bound, as_json=not ns.dot, as_dot=ns.dot)


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset, tuple)):
        return list(o)
    raise TypeError(type(o).__name__)


def render(cfg, result):
    """Serialise a command result deterministically; returns (text, extension)."""
    if hasattr(result, "to_dot") and cfg.as_dot:
        schema = "hopf72/lattice-dot/1" if cfg.command == "lattice" else "hopf72/quiver-dot/1"
        return f"// schema: {schema}\n" + result.to_dot(), "dot"
    if hasattr(result, "to_json"):
        result = result.to_json()
    if cfg.failures:
        result = {**result, "failures": cfg.failures}
    return json.dumps(result, indent=2, sort_keys=True, default=_default) + "\n", "json"


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg = config_from_args(argv)
        result = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        stderr.write(f"hopf72: error: {exc}\n")
        return USAGE
    text, ext = render(cfg, result)
    if cfg.out:
        os.makedirs(cfg.out, exist_ok=True)
        path = os.path.join(cfg.out, f"{cfg.command}.{ext}")
        with open(path, "w") as fh:
            fh.write(text)
        stderr.write(f"wrote {path}\n")
    else:
        stdout.write(text)
    if cfg.failures:
        stderr.write(json.dumps({"failures": cfg.failures}) + "\n")
        return FAIL
    return PASS


def main():
    try:
        code = run(sys.argv[1:])
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = PASS
    sys.exit(code)
