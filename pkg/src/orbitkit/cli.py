"""Command-line front end.

Exit codes: 0 when every requested claim verifies, 1 when a mathematical
claim is falsified (a certificate is attached to the report), 2 on usage
errors or exceeded caps.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import json
import sys
from itertools import product as iproduct

import numpy as np

from . import _kernels
from . import poset as ps
from . import restriction as rs
from . import suite as suite_mod
from .dynamics import homomesy_check, orbit_decomposition, resonance_check
from .gamma import GammaBijection
from .labelings import PStrictSpace
from .partitions import PartitionSpace, diff_word
from .poset import CapExceeded, PosetError
from .restriction import RestrictionError


class UsageError(ValueError):
    pass


def build_restriction(P, spec: str):
    """Restriction spec: ``q:N``, ``typea-flag``, ``beta:b1,b2,...`` or
    ``bounds:a1,..|b1,..`` (per-element, indexed like the poset)."""
    if spec.startswith("q:"):
        return rs.from_global_bound(P, int(spec[2:]))
    if spec == "typea-flag":
        return rs.typea_flag(P)
    if spec.startswith("beta:"):
        return rs.from_flags(P, [int(v) for v in spec[5:].split(",")])
    if spec.startswith("bounds:"):
        lo, _, hi = spec[7:].partition("|")
        return rs.from_bounds(P, [int(v) for v in lo.split(",")],
                              [int(v) for v in hi.split(",")])
    raise UsageError(f"bad restriction spec {spec!r}")


def build_projection(space: PartitionSpace, pi_spec: str, gamma_bijection=None):
    if pi_spec == "id":
        return space.identity_projection()
    if pi_spec.startswith("threechains:"):
        if gamma_bijection is None:
            raise UsageError("threechains projection applies to gamma partitions")
        c = int(pi_spec.split(":")[1])
        return suite_mod._threechains_image(gamma_bijection, c)
    if pi_spec.startswith("table:"):
        with open(pi_spec[6:]) as fh:
            return np.array(json.load(fh)["image"], dtype=np.int64)
    raise UsageError(f"bad projection spec {pi_spec!r}")


def _parse_v(text: str):
    return tuple(int(t) for t in text.split(","))


class Run:
    """Enumerated family plus the action requested by the flags."""

    def __init__(self, args):
        self.args = args
        if args.poset is None:
            raise UsageError("--poset is required")
        self.poset = ps.build_poset(args.poset, cap=args.cap)
        self.ell = args.ell
        self.kind = None  # "labelings" | "partitions"
        self.bijection = None
        action = args.action
        if action == "pro":
            R = self._restriction()
            self.space = PStrictSpace(self.poset, self.ell, R)
            self.kind = "labelings"
            self.step = self.space.promotion
        elif action in ("row", "togpro", "hpro"):
            if args.gamma or action == "togpro":
                R = self._restriction()
                self.bijection = GammaBijection(self.poset, self.ell, R)
                self.space = self.bijection.partition_space
            else:
                self.space = PartitionSpace(self.poset, self.ell)
            self.kind = "partitions"
            if action == "row":
                self.step = self.space.rowmotion
            elif action == "togpro":
                self.step = self.space.toggle_promotion
            else:
                image = build_projection(self.space, args.pi, self.bijection)
                v = _parse_v(args.v)
                order = self.space.hyperplane_order(image, v)
                self.step = lambda s: self.space.apply_order(s, order)
        elif action is None:
            R = None
            if args.restriction:
                R = self._restriction()
            if R is not None:
                self.space = PStrictSpace(self.poset, self.ell, R)
                self.kind = "labelings"
                self.step = self.space.promotion
            else:
                self.space = PartitionSpace(self.poset, self.ell)
                self.kind = "partitions"
                self.step = self.space.rowmotion
        else:
            raise UsageError(f"unknown action {action!r}")

    def _restriction(self):
        if not self.args.restriction:
            raise UsageError("this action needs --restriction")
        return build_restriction(self.poset, self.args.restriction)

    def elements(self):
        return list(self.space.enumerate(cap=self.args.cap))

    def statistic(self, spec: str):
        space = self.space
        if spec == "chi:all":
            if self.kind == "labelings":
                cells = [(p, i) for p in range(space.poset.n) for i in range(space.ell)]
                return lambda s: space.chi(s, cells), spec
            return lambda s: space.chi(s, range(space.poset.n)), spec
        if spec.startswith("chi:p="):
            elems = [int(v) for v in spec[6:].split(",")]
            return lambda s: space.chi(s, elems), spec
        if spec.startswith("chi:cell="):
            cells = [tuple(int(v) for v in c.split(":")) for c in spec[9:].split(",")]
            return lambda s: space.chi(s, cells), spec
        if spec.startswith("chi:antipodal="):
            x = int(spec[14:])
            base = self.poset if self.kind == "partitions" else space.poset
            x2 = ps.antipode(base, x)
            if self.kind == "partitions":
                return lambda s: space.chi(s, (x, x2)), spec
            ell = space.ell
            cells = [[(x, i), (x2, ell - 1 - i)] for i in range(ell)]
            flat = [c for pair in cells for c in pair]
            return lambda s: space.chi(s, flat), spec
        if spec.startswith("chi:anticell="):
            p, i = (int(v) for v in spec[13:].split(":"))
            p2 = ps.antipode(space.poset, p)
            return lambda s: space.chi(s, [(p, i), (p2, space.ell - 1 - i)]), spec
        if spec.startswith("fiber-exceed:"):
            kv = dict(part.split("=") for part in spec[13:].split(","))
            p, d = int(kv["p"]), int(kv["d"])
            return lambda s: space.fiber_exceed_count(s, p, d), spec
        if spec.startswith("xi:"):
            kv = dict(part.split("=") for part in spec[3:].split(","))
            p, b = int(kv["p"]), int(kv["b"])
            return lambda s: space.xi(s, p, b), spec
        raise UsageError(f"bad statistic spec {spec!r}")

    def projection(self, spec: str):
        if spec == "con":
            if self.kind != "labelings":
                raise UsageError("binary content projects labelings")
            return self.space.binary_content, "con"
        if spec == "diff":
            if self.kind != "partitions" or self.space.gamma is None:
                raise UsageError("diff projects gamma partitions (use --gamma)")
            return lambda s: diff_word(self.space, s), "diff"
        raise UsageError(f"bad projection spec {spec!r}")

    def describe(self) -> str:
        return self.space.describe()


def metadata(args) -> dict:
    return {
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "kernel_backend": _kernels.BACKEND,
        "hyperplane_sweep": suite_mod.HYPERPLANE_SWEEP,
        "workers": getattr(args, "workers", 1),
    }


def write_report(doc: dict, path: str | None):
    if not path:
        return
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
    csv_path = path[:-5] + ".csv" if path.endswith(".json") else path + ".csv"
    rows = []
    if "orbit_sizes" in doc:
        rows = [("orbit_size", "count")] + sorted(
            (int(k), v) for k, v in doc["orbit_sizes"].items())
    elif "criteria" in doc:
        rows = [("criterion", "name", "passed", "seconds")] + [
            (c["cid"], c["name"], c["passed"], c["seconds"]) for c in doc["criteria"]]
    if rows:
        with open(csv_path, "w", newline="") as fh:
            csv.writer(fh).writerows(rows)


def cmd_enumerate(args) -> int:
    run = Run(args)
    count = 0
    dump = open(args.dump, "w") if args.dump else None
    for s in run.space.enumerate(cap=args.cap):
        count += 1
        if dump:
            if run.kind == "labelings":
                dump.write(json.dumps(run.space.labeling_to_json(s)) + "\n")
            else:
                dump.write(json.dumps(run.space.partition_to_json(s)) + "\n")
    if dump:
        dump.close()
    print(f"{run.describe()}: {count} elements")
    write_report({"set": run.describe(), "count": count, "metadata": metadata(args)},
                 args.report)
    return 0


def cmd_orbits(args) -> int:
    run = Run(args)
    dec = orbit_decomposition(run.elements(), run.step, workers=args.workers,
                              action_name=args.action or "default",
                              set_descriptor=run.describe())
    doc = dec.to_json()
    doc["metadata"] = metadata(args)
    print(f"{run.describe()} under {doc['action']}: {doc['orbit_count']} orbits, "
          f"sizes {doc['orbit_sizes']}, order {doc['order']}")
    write_report(doc, args.report)
    return 0


def cmd_order(args) -> int:
    run = Run(args)
    dec = orbit_decomposition(run.elements(), run.step, workers=args.workers)
    print(dec.order)
    write_report({"set": run.describe(), "action": args.action, "order": dec.order,
                  "metadata": metadata(args)}, args.report)
    return 0


def cmd_homomesy(args) -> int:
    run = Run(args)
    if not args.statistic:
        raise UsageError("--statistic is required")
    dec = orbit_decomposition(run.elements(), run.step, workers=args.workers)
    reports = []
    verdicts = []
    for spec in args.statistic:
        stat, name = run.statistic(spec)
        rep = homomesy_check(dec, run.space.from_key, run.step, stat, statistic_name=name)
        reports.append(rep.to_json())
        verdicts.append(rep.is_homomesic)
        print(f"{name}: {'homomesic c=' + str(rep.c) if rep.is_homomesic else 'NOT homomesic'}")
    doc = dec.to_json()
    doc["homomesies"] = reports
    doc["metadata"] = metadata(args)
    write_report(doc, args.report)
    return 0 if all(verdicts) else 1


def cmd_resonance(args) -> int:
    run = Run(args)
    proj, name = run.projection(args.projection)
    omega = args.omega
    if omega is None:
        raise UsageError("--omega is required")
    rep = resonance_check(run.elements(), run.step, proj, omega,
                          projection_name=name, rotation=args.rotation)
    print(f"{name} resonance with frequency {omega}: "
          f"{'verified' if rep.verified else 'degenerate' if rep.degenerate else 'FALSIFIED'}")
    doc = {"set": run.describe(), "action": args.action,
           "resonance": [rep.to_json()], "metadata": metadata(args)}
    write_report(doc, args.report)
    return 0 if rep.verified or rep.degenerate else 1


def cmd_distribution(args) -> int:
    res = suite_mod.criterion_06_distribution_laws()
    print(res.line())
    write_report({"criteria": [_criterion_json(res)], "metadata": metadata(args)},
                 args.report)
    return 0 if res.passed else 1


def cmd_equivariance(args) -> int:
    picks = {"phi-togpro": suite_mod.criterion_01_promotion_equivariance,
             "bk-toggles": suite_mod.criterion_02_bk_toggle_equivariance,
             "phi-hpro": suite_mod.criterion_10_hyperplane_equivariance,
             "multifold": suite_mod.criterion_11_multifold_symmetry}
    if args.kind not in picks:
        raise UsageError(f"--kind must be one of {sorted(picks)}")
    res = picks[args.kind](workers=args.workers)
    print(res.line())
    write_report({"criteria": [_criterion_json(res)], "metadata": metadata(args)},
                 args.report)
    return 0 if res.passed else 1


def cmd_bijection(args) -> int:
    with open(args.input) as fh:
        doc = json.load(fh)
    P = ps.build_poset(doc["poset"])
    R = build_restriction(P, doc["restriction"])
    B = GammaBijection(P, doc["ell"], R)
    if args.direction == "forward":
        labels = B.labeling_space.labeling_from_json(doc)
        values = B.forward(labels)
        out = B.partition_space.partition_to_json(values)
    else:
        values = B.partition_space.partition_from_json(doc)
        labels = B.inverse(values)
        B.labeling_space.validate(labels)
        out = B.labeling_space.labeling_to_json(labels)
    out["poset"] = doc["poset"]
    out["restriction"] = doc["restriction"]
    with open(args.output, "w") as fh:
        json.dump(out, fh, indent=2, sort_keys=True)
    print(f"wrote {args.output}")
    return 0


def _criterion_json(res) -> dict:
    return {"cid": res.cid, "name": res.name, "passed": res.passed,
            "detail": res.detail, "seconds": round(res.seconds, 2),
            "certificates": res.certificates}


def cmd_paper_suite(args) -> int:
    only = set(args.criteria.split(",")) if args.criteria else None
    results = suite_mod.run_paper_suite(scale=args.scale, workers=args.workers,
                                        only=only)
    for res in results:
        print(res.line())
    doc = {"criteria": [_criterion_json(r) for r in results],
           "scale": args.scale, "metadata": metadata(args)}
    write_report(doc, args.report)
    failed = [r.cid for r in results if not r.passed]
    if failed:
        print(f"FAILED: {', '.join(failed)}")
        return 1
    print("all criteria passed")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitkit",
        description="Exhaustive orbit dynamics on posets: promotion, rowmotion, "
                    "toggles, and the bijections between them.")
    parser.add_argument("--config", help="key = value file supplying flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, action_default=None):
        p.add_argument("--poset", help="poset spec, e.g. prod:2x3, chain:4, V")
        p.add_argument("--ell", type=int, default=1, help="number of stacked copies")
        p.add_argument("--restriction", help="q:N | typea-flag | beta:... | bounds:lo|hi")
        p.add_argument("--action", default=action_default,
                       choices=["pro", "row", "togpro", "hpro"])
        p.add_argument("--gamma", action="store_true",
                       help="act on partitions over the gamma poset of (poset, restriction)")
        p.add_argument("--pi", default="id", help="hpro projection: id | threechains:c | table:FILE")
        p.add_argument("--v", default="-1,-1", help="hpro direction, e.g. -1,-1,1")
        p.add_argument("--cap", type=int, default=2 * 10**6)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--report", help="write a JSON report (plus CSV summary) here")

    p = sub.add_parser("enumerate", help="count (and optionally dump) a family")
    common(p)
    p.add_argument("--dump", help="write one JSON object per element to this file")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("orbits", help="orbit decomposition of an action")
    common(p)
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("order", help="order (lcm of orbit sizes) of an action")
    common(p)
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("homomesy", help="exact orbit averages of statistics")
    common(p)
    p.add_argument("--statistic", action="append",
                   help="chi:all | chi:p=.. | chi:cell=p:i,... | chi:antipodal=x | "
                        "chi:anticell=p:i | fiber-exceed:p=..,d=.. | xi:p=..,b=..")
    p.set_defaults(fn=cmd_homomesy)

    p = sub.add_parser("resonance", help="verify a cyclic projection of an action")
    common(p)
    p.add_argument("--projection", default="con", help="con | diff")
    p.add_argument("--omega", type=int, help="cyclic frequency")
    p.add_argument("--rotation", default="left", choices=["left", "right"])
    p.set_defaults(fn=cmd_resonance)

    p = sub.add_parser("distribution", help="run the distribution-law battery")
    common(p)
    p.set_defaults(fn=cmd_distribution)

    p = sub.add_parser("equivariance", help="run an equivariance battery")
    common(p)
    p.add_argument("--kind", default="phi-togpro",
                   help="phi-togpro | bk-toggles | phi-hpro | multifold")
    p.set_defaults(fn=cmd_equivariance)

    p = sub.add_parser("bijection", help="apply the bijection to a JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--direction", default="forward", choices=["forward", "inverse"])
    p.set_defaults(fn=cmd_bijection)

    p = sub.add_parser("paper-suite", help="run the full verification battery")
    p.add_argument("--scale", default="small", choices=["small", "full"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--criteria", help="comma-separated subset, e.g. c03,c12")
    p.add_argument("--report", help="write a JSON report (plus CSV summary) here")
    p.set_defaults(fn=cmd_paper_suite)
    return parser


def load_config(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--config" in argv:
        at = argv.index("--config")
        try:
            path = argv[at + 1]
        except IndexError:
            print("error: --config needs a file", file=sys.stderr)
            return 2
        del argv[at:at + 2]
        for key, value in load_config(path).items():
            flag = "--" + key.replace("_", "-")
            if flag in argv:
                continue  # explicit flags win
            if value.lower() in ("true", "yes", "on"):
                argv.append(flag)
            elif value.lower() in ("false", "no", "off"):
                pass
            else:
                argv += [flag, value]
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, PosetError, RestrictionError, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
