"""Command-line front end: single checks, parameter sweeps, worked examples.

Every command writes a JSON document (or a flat CSV projection) of
records ``{params, check, status, details, timing_ms}`` and exits 0 when
all checks pass, 1 when one fails and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .combinatorics import (
    BipartitionShape,
    Params,
    act_on_tableau,
    column_initial_tableau,
    enumerate_standard_hook,
    leg_word,
    residue_sequence,
    residue_sequence_hook,
)
from .homs import (
    HookFamily,
    case_four_applies,
    check_compositions,
    check_exactness,
    check_hom_property,
    gamma_applies,
    gamma_map,
)
from .klr import verify_klr_relations
from .linalg import Field, SparseMatrix
from .module import HookSpechtModule
from .report import CheckResult, legset_str
from .structure import composition_series, detect_case

SCHEMA = 1
CHECKS = ("klr", "sparsity", "series", "homs")
EXAMPLES = ("residues-5-3", "case2-n5", "case3-n5", "case4-n6")
DEFAULT_MAX_N = 14


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------- parsing

def parse_kappa(text: str) -> Tuple[int, int]:
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    if len(parts) != 2:
        raise UsageError(f"kappa must be two integers 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"kappa must be two integers 'a,b', got {text!r}") from None


def parse_int_list(text: str) -> List[int]:
    out: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "-" in chunk[1:]:
            lo, hi = chunk.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(chunk))
    return out


def parse_field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


@dataclass
class RunConfig:
    e_list: List[int]
    kappa_list: Optional[List[Tuple[int, int]]]   # None means all pairs mod e
    n_range: List[int]
    m_selector: Optional[List[int]]               # None means all
    field: str = "rational"
    seed: int = 0
    output: Optional[str] = None
    format: str = "json"
    cache: Optional[str] = None
    checks: Tuple[str, ...] = CHECKS
    jobs: int = 1

    def validate(self, max_n: int = DEFAULT_MAX_N) -> None:
        if any(e < 3 for e in self.e_list):
            raise UsageError("every e must be >= 3")
        if not self.n_range or min(self.n_range) < 1:
            raise UsageError("n must be >= 1")
        if max(self.n_range) > max_n:
            raise UsageError(f"n up to {max(self.n_range)} exceeds the guard {max_n}; "
                             "raise it with --max-n")
        bad = set(self.checks) - set(CHECKS)
        if bad:
            raise UsageError(f"unknown checks {sorted(bad)}; choose from {list(CHECKS)}")
        parse_field(self.field)

    def kappas(self, e: int) -> List[Tuple[int, int]]:
        if self.kappa_list is None:
            return [(a, b) for a in range(e) for b in range(e)]
        return sorted({(a % e, b % e) for a, b in self.kappa_list})

    def ms(self, n: int) -> List[int]:
        if self.m_selector is None:
            return list(range(n + 1))
        return [m for m in self.m_selector if 0 <= m <= n]

    def as_dict(self) -> dict:
        return {"e_list": self.e_list,
                "kappa_list": "all" if self.kappa_list is None else [list(k) for k in self.kappa_list],
                "n_range": self.n_range,
                "m_selector": "all" if self.m_selector is None else self.m_selector,
                "field": self.field, "seed": self.seed, "checks": list(self.checks)}


# ---------------------------------------------------------------- cache

def cache_dir(flag: Optional[str]) -> Optional[Path]:
    """Explicit flag first, then ``SPECHT_CACHE_DIR``; no caching otherwise."""
    path = flag or os.environ.get("SPECHT_CACHE_DIR")
    return Path(path) if path else None


def module_fingerprint(M: HookSpechtModule) -> str:
    h = hashlib.sha256()
    for lab in M.generator_labels():
        G = M.generator_matrix(lab)
        entries = sorted((i, j, str(x)) for (i, j), x in G.entries().items())
        h.update(json.dumps([list(map(str, lab)) if lab[0] != "e" else ["e", list(lab[1])],
                             entries]).encode())
    return h.hexdigest()


class ResultCache:
    """Check results keyed by ``(e, kappa, n, m, field)`` and a matrix fingerprint."""

    def __init__(self, root: Optional[Path]):
        self.root = root
        if root is not None:
            root.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.root / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")

    def get(self, key: str, fingerprint: str) -> Optional[dict]:
        if self.root is None:
            return None
        p = self._path(key)
        if not p.exists():
            return None
        try:
            data = json.loads(p.read_text())
        except (OSError, json.JSONDecodeError):
            return None
        if data.get("key") != key or data.get("fingerprint") != fingerprint:
            return None
        return data.get("result")

    def put(self, key: str, fingerprint: str, result: dict) -> None:
        if self.root is None:
            return
        tmp = self._path(key).with_suffix(".tmp")
        tmp.write_text(json.dumps({"key": key, "fingerprint": fingerprint, "result": result},
                                  sort_keys=True))
        tmp.replace(self._path(key))


# ---------------------------------------------------------------- checks

def _record(params: dict, check: str, passed: bool, details: dict, t0: float,
            status: Optional[str] = None) -> dict:
    return {"params": params, "check": check, "status": status or ("pass" if passed else "fail"),
            "details": details, "timing_ms": round((time.perf_counter() - t0) * 1000, 3)}


def sparsity_details(M: HookSpechtModule) -> Tuple[bool, dict]:
    F = M.field
    unit = {F(1), F(-1)}
    for l in range(1, M.n):
        G = M.psi_matrix(l)
        if not G.is_monomial() or any(x not in unit for x in G.entries().values()):
            return False, {"generator": f"psi{l}"}
    for i in range(1, M.n + 1):
        G = M.y_matrix(i)
        if not G.is_monomial() or any(x not in unit for x in G.entries().values()):
            return False, {"generator": f"y{i}"}
    total = None
    for r in M.occurring_residues():
        E = M.e_matrix(r)
        if any(i != j or x != F.one for (i, j), x in E.entries().items()):
            return False, {"generator": "e(" + ",".join(map(str, r)) + ")"}
        total = E if total is None else total + E
    if total != SparseMatrix.identity(M.dim, F):
        return False, {"generator": "sum of idempotents"}
    return True, {"dim": M.dim}


def run_module_checks(params: Params, field: Field, checks: Sequence[str], seed: int,
                      cache: ResultCache) -> List[dict]:
    """Per-module checks for one ``(e, kappa, n, m)``."""
    M = HookSpechtModule(params, field)
    pdict = dict(params.as_dict(), field=field.name)
    fp = None
    out = []
    for check in checks:
        if check == "homs":
            continue
        t0 = time.perf_counter()
        key = json.dumps([check, params.e, list(params.kappa), params.n, params.m, field.name, seed])
        if fp is None:
            fp = module_fingerprint(M)
        hit = cache.get(key, fp)
        if hit is not None:
            rec = _record(pdict, check, hit["status"] == "pass", hit["details"], t0, hit["status"])
            rec["cache"] = "hit"
            out.append(rec)
            continue
        if check == "klr":
            rep = verify_klr_relations(M)
            passed, details = rep.passed, {"checked": rep.checked,
                                           "counterexample": rep.first.as_dict() if rep.first else None}
        elif check == "sparsity":
            passed, details = sparsity_details(M)
        elif check == "series":
            rep = composition_series(params, field, seed)
            d = rep.as_dict()
            passed = rep.passed
            details = {"case": d["case"], "chain_dims": d["chain_dims"],
                       "factor_dims": d["factor_dims"], "factor_irreducible": d["factor_irreducible"],
                       "failed": [c.as_dict() for c in rep.checks if not c.passed]}
        else:
            raise UsageError(f"unknown check {check}")
        rec = _record(pdict, check, passed, details, t0)
        cache.put(key, fp, {"status": rec["status"], "details": details})
        rec["cache"] = "miss"
        out.append(rec)
    return out


def homs_results(params: Params, field: Field) -> List[CheckResult]:
    family = HookFamily.of(params, field)
    results: List[CheckResult] = []
    if gamma_applies(params):
        for m in range(params.n):
            results.append(check_hom_property(gamma_map(m, params, family=family)))
    results.extend(check_exactness(params, family=family))
    if case_four_applies(params):
        results.extend(check_compositions(params, family=family))
    return results


def run_family_checks(params: Params, field: Field, cache: ResultCache) -> dict:
    """Homomorphism checks for one ``(e, kappa, n)``; ``m`` is reported as null."""
    t0 = time.perf_counter()
    pdict = {"e": params.e, "kappa": list(params.kappa), "n": params.n, "m": None,
             "field": field.name}
    family = HookFamily.of(params, field)
    fp = hashlib.sha256("".join(module_fingerprint(family.module(m))
                                for m in range(params.n + 1)).encode()).hexdigest()
    key = json.dumps(["homs", params.e, list(params.kappa), params.n, field.name])
    hit = cache.get(key, fp)
    if hit is not None:
        rec = _record(pdict, "homs", hit["status"] == "pass", hit["details"], t0, hit["status"])
        rec["cache"] = "hit"
        return rec
    results = homs_results(params, field)
    failed = [r.as_dict() for r in results if not r.passed]
    details = {"case": detect_case(params), "checks": len(results), "failed": failed}
    if not results:
        status = "skipped"
        details["reason"] = "no homomorphisms for these parameters"
    else:
        status = "fail" if failed else "pass"
    rec = _record(pdict, "homs", status == "pass", details, t0, status)
    cache.put(key, fp, {"status": status, "details": details})
    rec["cache"] = "miss"
    return rec


def _task(args) -> List[dict]:
    kind, e, kappa, n, m, field_name, checks, seed, cache_root = args
    field = Field.parse(field_name)
    cache = ResultCache(Path(cache_root) if cache_root else None)
    if kind == "family":
        return [run_family_checks(Params(e, kappa, n, 0), field, cache)]
    return run_module_checks(Params(e, kappa, n, m), field, checks, seed, cache)


def sweep_tasks(cfg: RunConfig, cache_root: Optional[Path]) -> List[tuple]:
    tasks = []
    mod_checks = tuple(c for c in cfg.checks if c != "homs")
    root = str(cache_root) if cache_root else None
    for e in cfg.e_list:
        for kappa in cfg.kappas(e):
            for n in cfg.n_range:
                if mod_checks:
                    for m in cfg.ms(n):
                        tasks.append(("module", e, kappa, n, m, cfg.field, mod_checks, cfg.seed, root))
                if "homs" in cfg.checks:
                    tasks.append(("family", e, kappa, n, None, cfg.field, (), cfg.seed, root))
    return tasks


def run_sweep(cfg: RunConfig) -> List[dict]:
    tasks = sweep_tasks(cfg, cache_dir(cfg.cache))
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_task, tasks, chunksize=4))
    else:
        chunks = [_task(t) for t in tasks]
    return [rec for chunk in chunks for rec in chunk]


# ---------------------------------------------------------------- examples

def _check(name: str, ok: bool, details: dict, t0: float, params: dict) -> dict:
    return _record(params, name, ok, details, t0)


def example_records(name: str, field: Field, seed: int) -> List[dict]:
    t0 = time.perf_counter()
    if name == "residues-5-3":
        p = Params(3, (0, 1), 13)
        shape = BipartitionShape.general((5, 3), (2, 2, 1))
        tab = column_initial_tableau(shape)
        first = residue_sequence(shape, tab, p)
        # the tableau obtained by the cycles (4 5 6)(11 13 12)
        perm = list(range(1, 14))
        for cyc in ((4, 5, 6), (11, 13, 12)):
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                perm[a - 1] = b
        second = residue_sequence(shape, act_on_tableau(perm, tab), p)
        want1 = (1, 0, 2, 2, 1, 0, 2, 1, 0, 2, 1, 0, 1)
        want2 = (1, 0, 2, 0, 2, 1, 2, 1, 0, 2, 0, 1, 1)
        pd = {"e": 3, "kappa": [0, 1], "shape": [[5, 3], [2, 2, 1]]}
        return [
            _check("column_initial_residues", first == want1, {"residues": list(first)}, t0, pd),
            _check("permuted_residues", second == want2, {"residues": list(second)}, t0, pd),
        ]
    if name == "case2-n5":
        p = Params(3, (0, 1), 5, 3)
    elif name == "case3-n5":
        p = Params(3, (0, 2), 5, 2)
    elif name == "case4-n6":
        p = Params(3, (0, 2), 6, 3)
    else:
        raise UsageError(f"unknown example {name!r}; choose from {list(EXAMPLES)}")
    rep = composition_series(p, field, seed)
    M = HookSpechtModule(p, field)
    sets = rep.chain_legsets(M)
    factors = [[legset_str(A) for A in hi if A not in set(lo)] for lo, hi in zip(sets, sets[1:])]
    pd = dict(p.as_dict(), field=field.name)
    return [_record(pd, "comp-series", rep.passed, {
        "case": rep.case, "factor_dims": rep.factor_dims,
        "factor_irreducible": rep.factor_irreducible, "factor_bases": factors,
        "failed": [c.as_dict() for c in rep.checks if not c.passed]}, t0)]


# ---------------------------------------------------------------- output

def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    cols = ["e", "kappa", "n", "m", "field", "check", "status", "details", "timing_ms"]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in doc["records"]:
        p = r.get("params", {})
        kappa = p.get("kappa")
        w.writerow([p.get("e"), ",".join(map(str, kappa)) if kappa else "", p.get("n"), p.get("m"),
                    p.get("field", ""), r["check"], r["status"],
                    json.dumps(r.get("details", {}), sort_keys=True), r.get("timing_ms")])
    return buf.getvalue()


def emit(doc: dict, args) -> None:
    text = render(doc, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def document(command: str, records: List[dict], config: Optional[dict] = None) -> dict:
    failed = [r for r in records if r["status"] == "fail"]
    doc = {"schema": SCHEMA, "command": command, "passed": not failed, "records": records}
    if config is not None:
        doc["config"] = config
    if failed:
        first = failed[0]
        doc["first_failure"] = {"params": first["params"], "check": first["check"],
                                "details": first["details"]}
    return doc


# ---------------------------------------------------------------- argparse

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookspecht",
        description="Exact computations with Specht modules of level-two cyclotomic KLR "
                    "algebras labelled by hook bipartitions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="rational", help="'rational' or 'fp:<p>'")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for the randomized oracle")
    common.add_argument("--cache-dir", help="result cache (default: $SPECHT_CACHE_DIR, else none)")

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--e", type=int, required=True)
    single.add_argument("--kappa", required=True, help="multicharge 'k1,k2' (reduced mod e)")
    single.add_argument("--n", type=int, required=True)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common, single], help="list leg sets and residues")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("matrix", parents=[common, single], help="emit one generator matrix")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--gen", required=True, help="psi:<l>, y:<i> or e:<i1,...,in>")

    p = sub.add_parser("verify-klr", parents=[common, single], help="check the KLR relations")
    p.add_argument("--m", type=int, required=True)

    sub.add_parser("verify-homs", parents=[common, single],
                   help="homomorphisms, exact sequences and the commutative diagram")

    p = sub.add_parser("comp-series", parents=[common, single], help="composition series")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("sweep", parents=[common], help="run checks over a parameter grid")
    p.add_argument("--e", dest="e_list", default="3", help="list such as 3,4,5 or 3-5")
    p.add_argument("--kappa", dest="kappa_list", default="all",
                   help="'all' or pairs separated by ';' such as '0,1;0,2'")
    p.add_argument("--n", dest="n_range", default="2-6", help="range such as 2-8")
    p.add_argument("--m", dest="m_selector", default="all", help="'all' or a list")
    p.add_argument("--checks", default=",".join(CHECKS), help=f"subset of {','.join(CHECKS)}")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="guard on the largest n")

    p = sub.add_parser("example", parents=[common], help="replay a worked example")
    p.add_argument("name", choices=EXAMPLES)
    return parser


def _params(args, m: Optional[int] = None) -> Params:
    e, kappa, n = args.e, parse_kappa(args.kappa), args.n
    try:
        return Params(e, kappa, n, args.m if m is None else m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_gen(text: str, n: int, e: int):
    kind, _, arg = text.partition(":")
    try:
        if kind == "psi":
            l = int(arg)
            if not 1 <= l <= n - 1:
                raise UsageError(f"psi index must lie in 1..{n - 1}")
            return ("psi", l)
        if kind == "y":
            i = int(arg)
            if not 1 <= i <= n:
                raise UsageError(f"y index must lie in 1..{n}")
            return ("y", i)
        if kind == "e":
            seq = tuple(int(x) % e for x in arg.split(","))
            if len(seq) != n:
                raise UsageError(f"residue sequence must have {n} entries")
            return ("e", seq)
    except ValueError:
        pass
    raise UsageError(f"bad generator {text!r}; use psi:<l>, y:<i> or e:<i1,...,in>")


def dispatch(args) -> dict:
    field = parse_field(args.field)
    cache = ResultCache(cache_dir(args.cache_dir))
    cmd = args.command
    if cmd == "basis":
        p = _params(args)
        t0 = time.perf_counter()
        recs = []
        for A in enumerate_standard_hook(p):
            recs.append(_record(dict(p.as_dict(), field=field.name), "basis", True, {
                "leg": list(A), "residues": list(residue_sequence_hook(p, A)),
                "word": list(leg_word(A).letters)}, t0))
        return document(cmd, recs)
    if cmd == "matrix":
        p = _params(args)
        M = HookSpechtModule(p, field)
        lab = parse_gen(args.gen, p.n, p.e)
        t0 = time.perf_counter()
        G = M.generator_matrix(lab)
        entries = [[i, j, str(x)] for (i, j), x in sorted(G.entries().items())]
        return document(cmd, [_record(dict(p.as_dict(), field=field.name), "matrix", True, {
            "generator": args.gen, "dim": M.dim, "basis": [list(A) for A in M.basis],
            "entries": entries}, t0)])
    if cmd == "verify-klr":
        p = _params(args)
        return document(cmd, run_module_checks(p, field, ("klr",), args.seed, cache))
    if cmd == "comp-series":
        p = _params(args)
        return document(cmd, run_module_checks(p, field, ("series",), args.seed, cache))
    if cmd == "verify-homs":
        p = _params(args, m=0)
        return document(cmd, [run_family_checks(p, field, cache)])
    if cmd == "sweep":
        kappa_list = None
        if args.kappa_list != "all":
            kappa_list = [parse_kappa(k) for k in args.kappa_list.split(";") if k.strip()]
        try:
            cfg = RunConfig(
                e_list=parse_int_list(args.e_list), kappa_list=kappa_list,
                n_range=parse_int_list(args.n_range),
                m_selector=None if args.m_selector == "all" else parse_int_list(args.m_selector),
                field=args.field, seed=args.seed, output=args.output, format=args.format,
                cache=args.cache_dir, checks=tuple(c.strip() for c in args.checks.split(",") if c.strip()),
                jobs=args.jobs)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        cfg.validate(args.max_n)
        return document(cmd, run_sweep(cfg), cfg.as_dict())
    if cmd == "example":
        return document(cmd, example_records(args.name, field, args.seed))
    raise UsageError(f"unknown command {cmd}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc = dispatch(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    emit(doc, args)
    if not doc["passed"]:
        first = doc["first_failure"]
        print(f"first failure: {first['check']} at {json.dumps(first['params'])}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
