"""Experiment runner: JSON config in, count tables and lemma checks out.

    orbitgrowth run --suite growth --out out/
    orbitgrowth run --config exp.json --format csv,json
    orbitgrowth check                      # every lemma suite, default instances
    orbitgrowth zoo list
    orbitgrowth report diff a.json b.json

Exit codes: 0 all checks pass, 1 some check failed, 2 bad config or a
capacity limit was hit.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import math
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .core import System, dyn_units, product_with_identity, restrict
from .errors import CapacityError, InputError, OrbitGrowthError
from .growth import classify, generalized_entropy
from .hyperspace import DEFAULT_HYPER_CAP, HyperSystem, hyper_sep_lower_witness
from .measures import (
    RationalMeasure,
    check_distance_distortion,
    check_psi_equivariance,
    check_support_cardinality,
    gamma_distance_trace,
    gamma_simplex_check,
    quotient_system,
    random_measure,
    separated_diracs,
    square_separated,
)
from .separation import EXACT, GREEDY, SEPARATED, SPANNING, max_separated, min_spanning, sample_growth, sep_on_subset
from .subshift import example_pipeline
from .zoo import DOUBLING, IDENTITY, MORSE_SMALE, ROTATION, SINGLE_ONE, ZooSpec, build, catalogue

log = logging.getLogger("orbitgrowth")

SUITES = ("growth", "hyper-bounds", "measure-squaring", "psi-embedding", "quotient", "subshift-example", "morse-smale")
CHECK_SUITES = ("hyper-bounds", "measure-squaring", "psi-embedding", "quotient", "subshift-example")
FORMATS = ("table", "csv", "json", "plotdata")
COLUMNS = ("suite", "system", "level", "epsilon", "n", "count_exact", "count_greedy",
           "class_family", "class_param", "check_name", "check_pass")

# per-suite defaults; every key a config may carry is listed here
DEFAULTS = {
    "growth": {"system": {"kind": IDENTITY, "resolution": 12}, "level": "base", "kind": SEPARATED,
               "n_range": [1, 12], "eps": ["1/4", "1/8"]},
    "hyper-bounds": {"system": {"kind": DOUBLING, "resolution": 10}, "level": "hyper",
                     "n_range": [1, 3], "eps": ["1/3", "1/4"], "lower": True},
    "measure-squaring": {"system": {"kind": DOUBLING, "resolution": 16}, "level": "measure",
                         "n": 2, "eps": ["1/10"], "sizes": [2, 3, 4], "iterations": 2},
    "psi-embedding": {"system": {"kind": ROTATION, "resolution": 12, "alpha": "1/4"}, "level": "measure",
                      "L": 4, "pairs": 200, "eps": ["1/20"]},
    "quotient": {"system": {"kind": MORSE_SMALE, "resolution": 16}, "level": "base",
                 "n_range": [1, 6], "eps": ["1/4", "1/8"], "rule": "infimum"},
    "subshift-example": {"system": {"kind": SINGLE_ONE, "resolution": 12}, "level": "hyper",
                         "ks": [0, 1, 2]},
    "morse-smale": {"system": {"kind": MORSE_SMALE, "resolution": 64}, "level": "measure",
                    "n_range": [1, 12], "eps": ["1/4", "1/8"], "L": 4, "steps": 50, "samples": 20},
}
COMMON_KEYS = {"suite", "seed", "exact_cap", "hyper_cap", "mode", "out", "format"}


def _frac(v) -> Fraction:
    try:
        return Fraction(str(v))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad number {v!r}") from exc


@dataclass
class ExperimentConfig:
    suite: str
    params: dict
    seed: int = 0
    exact_cap: int = 64
    hyper_cap: int = DEFAULT_HYPER_CAP
    mode: str = EXACT

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        suite = raw.get("suite")
        if suite not in SUITES:
            raise InputError(f"unknown suite {suite!r}; expected one of {SUITES}")
        allowed = set(DEFAULTS[suite]) | COMMON_KEYS
        unknown = sorted(set(raw) - allowed)
        if unknown:
            raise InputError(f"unknown config keys for suite {suite}: {unknown}")
        params = json.loads(json.dumps(DEFAULTS[suite]))
        params.update({k: v for k, v in raw.items() if k in DEFAULTS[suite]})
        cfg = cls(suite, params, int(raw.get("seed", 0)), int(raw.get("exact_cap", 64)),
                  int(raw.get("hyper_cap", DEFAULT_HYPER_CAP)), raw.get("mode", EXACT))
        cfg.validate()
        return cfg

    def validate(self):
        if self.mode not in (EXACT, GREEDY):
            raise InputError(f"mode must be {EXACT!r} or {GREEDY!r}")
        if "eps" in self.params:
            eps = self.eps
            if not eps or any(e <= 0 for e in eps):
                raise InputError("eps schedule must be nonempty and positive")
            if any(a <= b for a, b in zip(eps, eps[1:])):
                raise InputError("eps schedule must be strictly decreasing")
        if "n_range" in self.params:
            lo, hi = self.params["n_range"]
            if not 1 <= lo <= hi:
                raise InputError("n_range must be [lo, hi] with 1 <= lo <= hi")
        self.spec  # parses the system block

    @property
    def eps(self) -> list[Fraction]:
        return [_frac(e) for e in self.params["eps"]]

    @property
    def ns(self) -> list[int]:
        lo, hi = self.params["n_range"]
        return list(range(int(lo), int(hi) + 1))

    @property
    def spec(self) -> ZooSpec:
        return ZooSpec.from_dict(self.params["system"])

    def canonical(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "exact_cap": self.exact_cap,
                "hyper_cap": self.hyper_cap, "mode": self.mode, **self.params}

    def digest(self) -> str:
        return hashlib.sha256(json.dumps(self.canonical(), sort_keys=True).encode()).hexdigest()


@dataclass
class Report:
    config: ExperimentConfig
    rows: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def add(self, **kw):
        row = {c: kw.pop(c, None) for c in COLUMNS}
        row["suite"] = row["suite"] or self.config.suite
        for c in ("epsilon", "class_param"):
            if isinstance(row[c], Fraction):
                row[c] = str(row[c])
        if kw:
            row["detail"] = _jsonable(kw)
        self.rows.append(row)
        return row

    def check(self, name, ok, **kw):
        return self.add(check_name=name, check_pass=bool(ok), **kw)

    @property
    def checks(self):
        return [r for r in self.rows if r["check_name"]]

    @property
    def ok(self) -> bool:
        return not self.errors and all(r["check_pass"] for r in self.checks)

    def to_dict(self, timestamp=True) -> dict:
        body = {
            "provenance": {"config_hash": self.config.digest(), "version": __version__,
                           "numpy": np.__version__},
            "config": self.config.canonical(),
            "rows": self.rows,
            "errors": self.errors,
            "summary": {"checks": len(self.checks), "failed": sum(not r["check_pass"] for r in self.checks)},
        }
        body["report_hash"] = hashlib.sha256(json.dumps(_jsonable(body), sort_keys=True).encode()).hexdigest()
        if timestamp:
            body["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
        return _jsonable(body)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating, float)):
        return None if not math.isfinite(float(x)) else round(float(x), 12)
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, RationalMeasure):
        return x.to_dict()
    return x


# ---------------------------------------------------------------------------
# suites


def _counts(sys: System, n, eps, kind, cfg):
    solve = max_separated if kind == SEPARATED else min_spanning
    greedy, _ = solve(sys, n, eps, GREEDY)
    exact = solve(sys, n, eps, EXACT, cfg.exact_cap)[0] if cfg.mode == EXACT else None
    return exact, greedy


def suite_growth(cfg: ExperimentConfig, rep: Report):
    sys = build(cfg.spec)
    level, kind = cfg.params["level"], cfg.params["kind"]
    if level == "base":
        for eps in cfg.eps:
            counts = []
            for n in cfg.ns:
                exact, greedy = _counts(sys, n, eps, kind, cfg)
                counts.append((n, exact if exact is not None else greedy))
                rep.add(system=sys.name, level=level, epsilon=eps, n=n, count_exact=exact, count_greedy=greedy)
                if exact is not None:
                    ok = greedy <= exact if kind == SEPARATED else greedy >= exact
                    rep.check("greedy_bounds_exact", ok, system=sys.name, epsilon=eps, n=n,
                              instance=f"greedy={greedy} exact={exact} kind={kind}")
            if len(counts) >= 6:
                cls = classify(counts)
                rep.add(system=sys.name, level=level, epsilon=eps, class_family=cls.family, class_param=cls.param)
    cls = generalized_entropy(sys, cfg.eps, cfg.ns, level=level, mode=cfg.mode, exact_cap=cfg.exact_cap, kind=kind)
    rep.add(system=sys.name, level=level, class_family=cls.family, class_param=cls.param,
            per_eps=[(e, c.label()) for e, c in cls.fit.get("per_eps", [])])


def suite_hyper_bounds(cfg: ExperimentConfig, rep: Report):
    sys = build(cfg.spec)
    hsys = HyperSystem(sys, cfg.hyper_cap)
    hs = hsys.system
    hcap = max(cfg.exact_cap, hs.size)
    for eps in cfg.eps:
        for n in cfg.ns:
            span, _ = min_spanning(sys, n, eps, EXACT, cfg.exact_cap)
            hspan, wit = min_spanning(hs, n, eps, EXACT, hcap)
            rep.add(system=hs.name, level="hyper", epsilon=eps, n=n, count_exact=hspan)
            rep.check("hyper_span_upper", hspan <= 2 ** span, system=sys.name, level="hyper", epsilon=eps, n=n,
                      instance=f"Span(T_K,{n},{eps})={hspan} <= 2^Span(T,{n},{eps})=2^{span}")
            if not cfg.params.get("lower", True):
                continue
            sep, _ = max_separated(sys, n, eps, EXACT, cfg.exact_cap)
            hspan2, _ = min_spanning(hs, n, eps / 2, EXACT, hcap)
            rep.check("hyper_span_lower", hspan2 >= 2 ** sep - 1, system=sys.name, level="hyper", epsilon=eps, n=n,
                      instance=f"Span(T_K,{n},{eps / 2})={hspan2} >= 2^Sep(T,{n},{eps})-1={2 ** sep - 1}")
            w = hyper_sep_lower_witness(sys, n, eps, cfg.exact_cap, cfg.hyper_cap, hsys)
            rep.check("hyper_sep_witness", w.certified, system=sys.name, level="hyper", epsilon=eps, n=n,
                      instance=f"{w.size} subsets of a separated set pairwise D_n >= {eps / 2}",
                      witness=list(w.violations[:1]))


def suite_measure_squaring(cfg: ExperimentConfig, rep: Report):
    sys = build(cfg.spec)
    n = int(cfg.params["n"])
    for eps in cfg.eps:
        for size in cfg.params["sizes"]:
            E = separated_diracs(sys, n, eps, int(size), seed=cfg.seed)
            cur, cur_eps = E, eps
            for it in range(1, int(cfg.params["iterations"]) + 1):
                res = square_separated(cur, n, cur_eps, sys)
                want = len(cur) ** 2
                rep.add(system=sys.name, level="measure", epsilon=cur_eps, n=n, count_exact=len(res.measures),
                        iteration=it, size=size)
                rep.check("squaring_count", len(res.measures) == want, system=sys.name, level="measure",
                          epsilon=cur_eps, n=n, instance=f"#E_b={len(res.measures)} == (#E)^2={want}")
                rep.check("squaring_separated", res.certified, system=sys.name, level="measure",
                          epsilon=res.eps0, n=n, instance=f"{len(res.measures)} measures ({n},{res.eps0})-separated",
                          witness=list(res.violations[:1]))
                cur, cur_eps = res.measures, res.eps0


def suite_psi_embedding(cfg: ExperimentConfig, rep: Report):
    import random

    sys = build(cfg.spec)
    L = int(cfg.params["L"])
    rng = random.Random(cfg.seed)
    pts = list(range(sys.size))
    dist_fail, supp_fail = [], []
    eps = cfg.eps
    for _ in range(int(cfg.params["pairs"])):
        mu, lam = random_measure(rng, pts, L), random_measure(rng, pts, L)
        _, _, ok = check_distance_distortion(mu, lam, L, sys.space)
        if not ok:
            dist_fail.append((mu, lam))
        for e in eps:
            if not check_support_cardinality(mu, lam, L, e, sys.space):
                supp_fail.append((e, mu, lam))
    name = sys.name
    rep.check("psi_distance_distortion", not dist_fail, system=name, level="measure",
              instance=f"{cfg.params['pairs']} pairs in G_{L}", witness=dist_fail[:1])
    for e in eps:
        bad = [w for w in supp_fail if w[0] == e]
        rep.check("psi_support_cardinality", not bad, system=name, level="measure", epsilon=e,
                  instance=f"{cfg.params['pairs']} pairs in G_{L}", witness=[w[1:] for w in bad[:1]])
    if sys.injective:
        product = product_with_identity(sys, math.lcm(*range(1, L + 1)))
        bad = []
        for _ in range(20):
            mu = random_measure(rng, pts, L)
            if not check_psi_equivariance(sys, mu, L, product):
                bad.append(mu)
        rep.check("psi_equivariance", not bad, system=name, level="measure", instance="20 measures",
                  witness=bad[:1])


def suite_quotient(cfg: ExperimentConfig, rep: Report):
    sys = build(cfg.spec)
    Q, q = quotient_system(sys, rule=cfg.params["rule"])
    fixed = set(Q.fixed)
    K = [x for x in range(sys.size) if x not in fixed][: cfg.exact_cap]
    K0 = [Q.project(x) for x in K]
    for eps in cfg.eps:
        for n in cfg.ns:
            a = sep_on_subset(sys, n, eps, K, EXACT, cfg.exact_cap)
            b = sep_on_subset(q, n, eps, K0, EXACT, cfg.exact_cap)
            rep.add(system=sys.name, epsilon=eps, n=n, count_exact=a, quotient_count=b)
            rep.check("quotient_sep_equal", a == b, system=sys.name, epsilon=eps, n=n,
                      instance=f"Sep(H,{n},{eps},K)={a} == Sep(H0,{n},{eps},K0)={b} rule={cfg.params['rule']}")


def suite_subshift(cfg: ExperimentConfig, rep: Report):
    window = int(cfg.params["system"].get("resolution", 12))
    out = example_pipeline(window, tuple(cfg.params["ks"]), exact_cap=max(cfg.exact_cap, 2 * window + 1))
    for r in out["rows"]:
        eps = Fraction(1, 2 ** r["k"])
        rep.add(system=out["system"], level="base", epsilon=eps, n=r["n"], count_exact=r["exact"], formula=r["formula"])
        rep.check("span_formula", r["match"], system=out["system"], epsilon=eps, n=r["n"],
                  instance=f"|B_(n+2k)|={r['formula']} == Span={r['exact']}")
    cls = out["hyper_class"]
    rep.add(system=out["system"], level="hyper", class_family=cls.family, class_param=cls.param,
            h_hyper=out["h_hyper"])
    rep.check("hyper_rate_log2", abs(out["h_hyper"] - math.log(2)) <= 0.05, system=out["system"], level="hyper",
              instance=f"rate {out['h_hyper']:.4f} within 0.05 of log 2")


def suite_morse_smale(cfg: ExperimentConfig, rep: Report):
    import random

    sys = build(cfg.spec)
    for eps in cfg.eps:
        s = sample_growth(sys, eps, cfg.ns, SEPARATED, cfg.mode, exact_cap=max(cfg.exact_cap, sys.size))
        for n, c in s.samples:
            rep.add(system=sys.name, epsilon=eps, n=n, count_exact=c if cfg.mode == EXACT else None,
                    count_greedy=c if cfg.mode == GREEDY else None)
        cls = classify(s)
        rep.add(system=sys.name, epsilon=eps, class_family=cls.family, class_param=cls.param)
    fixed = sorted(sys.meta["fixed"])
    rng = random.Random(cfg.seed)
    L = int(cfg.params["L"])
    bad = []
    for _ in range(int(cfg.params["samples"])):
        mu = random_measure(rng, fixed, L)
        if not gamma_simplex_check(sys, mu):
            bad.append(mu)
    rep.check("gamma_fixed", not bad, system=sys.name, level="measure", instance="simplex measures fixed by T_*",
              witness=bad[:1])
    steps = int(cfg.params["steps"])
    for _ in range(int(cfg.params["samples"])):
        nu = random_measure(rng, list(range(sys.size)), L)
        trace = gamma_distance_trace(sys, nu, steps)
        rep.check("gamma_attracts", float(trace[-1]) < 0.05, system=sys.name, level="measure",
                  instance=f"Prohorov distance to Gamma after {steps} steps = {trace[-1]}")


RUNNERS = {
    "growth": suite_growth,
    "hyper-bounds": suite_hyper_bounds,
    "measure-squaring": suite_measure_squaring,
    "psi-embedding": suite_psi_embedding,
    "quotient": suite_quotient,
    "subshift-example": suite_subshift,
    "morse-smale": suite_morse_smale,
}


def run(cfg: ExperimentConfig) -> Report:
    rep = Report(cfg)
    try:
        RUNNERS[cfg.suite](cfg, rep)
    except CapacityError as exc:
        rep.errors.append({"type": "capacity", "cap": exc.cap, "message": str(exc)})
    except OrbitGrowthError as exc:
        rep.errors.append({"type": type(exc).__name__, "message": str(exc)})
    return rep


# ---------------------------------------------------------------------------
# output


def to_csv(rep: Report) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rep.rows:
        w.writerow({k: ("" if r[k] is None else r[k]) for k in COLUMNS})
    return buf.getvalue()


def to_table(rep: Report) -> str:
    lines = [f"suite {rep.config.suite}  config {rep.config.digest()[:12]}"]
    for r in rep.rows:
        if r["check_name"]:
            lines.append(f"  [{'PASS' if r['check_pass'] else 'FAIL'}] {r['check_name']}: "
                         f"{(r.get('detail') or {}).get('instance', '')}")
        elif r["class_family"]:
            lines.append(f"  class eps={r['epsilon'] or 'sup'}: {r['class_family']} {r['class_param'] or ''}".rstrip())
        else:
            lines.append(f"  eps={r['epsilon']} n={r['n']} exact={r['count_exact']} greedy={r['count_greedy']}")
    for e in rep.errors:
        lines.append(f"  [ERROR] {e['message']}")
    s = rep.to_dict(timestamp=False)["summary"]
    lines.append(f"checks {s['checks']}, failed {s['failed']}")
    return "\n".join(lines) + "\n"


def to_plotdata(rep: Report) -> dict:
    series = {}
    for r in rep.rows:
        if r["n"] is None or r["check_name"]:
            continue
        y = r["count_exact"] if r["count_exact"] is not None else r["count_greedy"]
        series.setdefault(str(r["epsilon"]), []).append([r["n"], y])
    return {"suite": rep.config.suite, "x": "n", "y": "count", "series": series}


def emit(rep: Report, formats, out: Path | None):
    formats = list(formats)
    for f in formats:
        if f not in FORMATS:
            raise InputError(f"unknown format {f!r}; expected {FORMATS}")
    texts = {}
    if "table" in formats:
        texts["report.txt"] = to_table(rep)
    if "csv" in formats:
        texts["report.csv"] = to_csv(rep)
    if "json" in formats:
        texts["report.json"] = json.dumps(rep.to_dict(), sort_keys=True, indent=1) + "\n"
    if "plotdata" in formats:
        texts["plotdata.json"] = json.dumps(to_plotdata(rep), sort_keys=True, indent=1) + "\n"
    if out is None:
        for name, text in texts.items():
            if name == "report.txt" or len(texts) == 1:
                sys.stdout.write(text)
        return []
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in texts.items():
        (out / name).write_text(text)
        written.append(out / name)
    return written


# ---------------------------------------------------------------------------
# entry point


def _load_config(args) -> dict:
    raw = {}
    if args.config:
        try:
            raw = json.loads(Path(args.config).read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"config {args.config} is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise InputError("config must be a JSON object")
    if args.suite:
        raw["suite"] = args.suite
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.exact_cap is not None:
        raw["exact_cap"] = args.exact_cap
    return raw


def _run_one(raw: dict, args) -> int:
    cfg = ExperimentConfig.from_dict(raw)
    rep = run(cfg)
    fmt = args.format.split(",") if args.format else raw.get("format", ["table"])
    out = Path(args.out) if args.out else (Path(raw["out"]) if raw.get("out") else None)
    if out is not None and args.command == "check" and args.suite is None:
        out = out / cfg.suite
    emit(rep, fmt, out)
    if rep.errors:
        return 2 if any(e["type"] == "capacity" for e in rep.errors) else 1
    return 0 if rep.ok else 1


def _diff(a: Path, b: Path) -> int:
    ra, rb = (json.loads(p.read_text()) for p in (a, b))
    for r in (ra, rb):
        r.pop("timestamp", None)
    if ra == rb:
        print("reports identical (timestamp ignored)")
        return 0
    for key in sorted(set(ra) | set(rb)):
        if ra.get(key) != rb.get(key) and key != "rows":
            print(f"{key}: {ra.get(key)!r} != {rb.get(key)!r}")
    rows_a, rows_b = ra.get("rows", []), rb.get("rows", [])
    for i in range(max(len(rows_a), len(rows_b))):
        x = rows_a[i] if i < len(rows_a) else None
        y = rows_b[i] if i < len(rows_b) else None
        if x != y:
            print(f"row {i}:\n  - {x}\n  + {y}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbitgrowth", description="Orbit-growth experiments and lemma checks")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (("run", "run one experiment suite"), ("check", "run lemma-check suites")):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--config", help="JSON config file")
        q.add_argument("--suite", choices=SUITES if name == "run" else CHECK_SUITES)
        q.add_argument("--out", help="output directory (default: stdout)")
        q.add_argument("--seed", type=int)
        q.add_argument("--exact-cap", type=int, dest="exact_cap")
        q.add_argument("--format", help=f"comma list of {','.join(FORMATS)}")
    z = sub.add_parser("zoo", help="zoo systems")
    z.add_argument("action", choices=["list"])
    r = sub.add_parser("report", help="compare reports")
    r.add_argument("action", choices=["diff"])
    r.add_argument("a")
    r.add_argument("b")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "zoo":
            for spec in catalogue():
                sys_ = build(spec)
                print(f"{spec.name():32s} points={sys_.size:4d} injective={sys_.injective} "
                      f"isometry={sys_.isometry}  {json.dumps(_jsonable(spec.to_dict()), sort_keys=True)}")
            return 0
        if args.command == "report":
            return _diff(Path(args.a), Path(args.b))
        raw = _load_config(args)
        if args.command == "run":
            if "suite" not in raw:
                raise InputError("run needs --suite or a config with a 'suite' key")
            return _run_one(raw, args)
        # check: a single lemma suite, or all of them on default instances
        if raw.get("suite") is not None and raw["suite"] not in CHECK_SUITES:
            raise InputError(f"{raw['suite']} is not a lemma-check suite")
        suites = [raw["suite"]] if raw.get("suite") else list(CHECK_SUITES)
        codes = [_run_one({**raw, "suite": s}, args) for s in suites]
        return max(codes)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
