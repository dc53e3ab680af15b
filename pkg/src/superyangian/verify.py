"""Suite runner over the named identity checks.

Evaluates registered checks under a configuration (window, depth, field,
signature, contraction, pyramid), turns each into a structured CheckResult,
and renders suite reports.  Configuration trouble (violated structural
hypotheses, window images that never stabilize, cutoff ceilings) is reported
as verdict "error", never as "fail": a fail always means a refuted identity
with a concrete witness.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, asdict

from . import __version__
from .scalars import SYMBOLIC, NumericField, ParamAssignment
from .series import StabilizationError, series_equal_on_window
from .vacmod import VacuumModule, zero_operator_check
from .yangmaps import HypothesisError
from .checks import REGISTRY, MANIFEST, Env, manifest_covered

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_ERROR = "error"

# Environment keys a worker needs to rebuild its Env from scratch.
ENV_KEYS = ("window", "depth", "sig", "contraction", "pyramid",
            "alt_boundary", "z_mode", "cutoff_max", "method")


class UnknownCheckError(ValueError):
    """Raised when a selection token matches neither a suite nor a check."""


@dataclass
class CheckResult:
    name: str
    suite: str
    verdict: str
    method: str
    window: int
    depth: int
    cutoff: int
    seconds: float
    terms: int
    witness: str | None
    detail: str | None
    params: str
    seed: int | None

    def line(self):
        extra = self.witness if self.verdict != VERDICT_PASS else self.detail
        return "%-22s %-6s %-7s cut=%-3s terms=%-5d %6.2fs  %s" % (
            self.name, self.verdict, self.method, self.cutoff, self.terms,
            self.seconds, extra or "")


def suites():
    """Sorted list of suite names present in the registry."""
    return sorted({spec.suite for spec in REGISTRY.values()})


def resolve(selection):
    """Expand a selection of suite names / check names / tags into a sorted
    list of check names.  None or "all" selects the whole registry."""
    if selection is None:
        return sorted(REGISTRY)
    if isinstance(selection, str):
        selection = [selection]
    out = set()
    suite_names = set(suites())
    all_tags = {t for spec in REGISTRY.values() for t in spec.tags}
    for token in selection:
        token = token.strip()
        if token == "all":
            out.update(REGISTRY)
        elif token in REGISTRY:
            out.add(token)
        elif token in suite_names:
            out.update(n for n, s in REGISTRY.items() if s.suite == token)
        elif token in all_tags:
            out.update(n for n, s in REGISTRY.items() if token in s.tags)
        else:
            raise UnknownCheckError(
                "unknown check or suite %r; suites: %s; checks: %s"
                % (token, ", ".join(sorted(suite_names)),
                   ", ".join(sorted(REGISTRY))))
    return sorted(out)


def make_env(params="symbolic", seed=None, **kwargs):
    if params == "random":
        field = NumericField(ParamAssignment.random(seed if seed else 1))
    else:
        field = SYMBOLIC
    opts = {k: kwargs.get(k) for k in ENV_KEYS if kwargs.get(k) is not None}
    return Env(field=field, **opts)


def _terms_of(elem, W):
    return len(elem.window(W).d)


def _eval_pairs(env, pairs):
    """Compare each (tag, lhs, rhs) under the configured method.

    Returns (verdict, witness, cutoff, terms).  The term count totals the
    window image of every left side at its accepted cutoff, a rough size
    measure for the work each identity represents."""
    worst = 0
    terms = 0
    for tag, lhs, rhs in pairs:
        if env.method in ("window", "both"):
            ok, wit, cut = series_equal_on_window(
                lhs, rhs, env.window, vmax=env.vmax())
            worst = max(worst, cut)
            terms += _terms_of(lhs.materialize(cut), env.window)
            if not ok:
                return VERDICT_FAIL, "%s: %s" % (tag, wit), worst, terms
        if env.method in ("module", "both"):
            comp = lhs - rhs
            module = VacuumModule(comp.ctx)
            ok, wit, cut = zero_operator_check(module, comp, env.depth)
            worst = max(worst, cut)
            if env.method == "module":
                terms += _terms_of(lhs.materialize(cut), env.window)
            if not ok:
                return VERDICT_FAIL, "%s: %s |0>" % (tag, wit), worst, terms
    return VERDICT_PASS, None, worst, terms


def run_check(name, env, params="symbolic", seed=None):
    if name not in REGISTRY:
        raise UnknownCheckError(
            "unknown check %r; valid: %s" % (name, ", ".join(sorted(REGISTRY))))
    spec = REGISTRY[name]
    t0 = time.perf_counter()
    verdict, witness, detail, cutoff, terms, method = (
        VERDICT_ERROR, None, None, 0, 0, env.method)
    try:
        out = spec.fn(env)
        detail = out.get("detail")
        if "pairs" in out:
            verdict, witness, cutoff, terms = _eval_pairs(env, out["pairs"])
        else:
            # Self-adjudicated sweep; exact unless the builder says otherwise.
            method = out.get("method", "exact")
            verdict = VERDICT_PASS if out["ok"] else VERDICT_FAIL
            witness = out.get("witness")
            cutoff = out.get("cutoff", 0) or 0
            terms = out.get("terms", 0) or 0
    except HypothesisError as exc:
        witness = None
        detail = "hypothesis: %s" % exc
    except StabilizationError as exc:
        witness = None
        detail = "stabilization: %s" % exc
    except Exception as exc:  # pragma: no cover - defensive
        witness = None
        detail = "%s: %s" % (type(exc).__name__, exc)
    return CheckResult(
        name=name, suite=spec.suite, verdict=verdict, method=method,
        window=env.window, depth=env.depth, cutoff=cutoff,
        seconds=round(time.perf_counter() - t0, 4), terms=terms,
        witness=witness, detail=detail, params=params, seed=seed)


def _worker(task):
    name, params, seed, kwargs = task
    env = make_env(params=params, seed=seed, **kwargs)
    return run_check(name, env, params=params, seed=seed)


def _seed_list(params, seeds):
    if params != "random":
        return [None]
    if seeds is None:
        return [1]
    if isinstance(seeds, int):
        return list(range(1, seeds + 1))
    return list(seeds) or [1]


def run_suite(selection=None, params="symbolic", seeds=None, jobs=1,
              **kwargs):
    """Run every selected check once per parameter assignment.

    Returns (results, summary).  Results are sorted by (name, seed)
    regardless of scheduling, so parallel runs are byte-identical to serial
    ones."""
    names = resolve(selection)
    tasks = [(name, params, seed, kwargs)
             for name in names for seed in _seed_list(params, seeds)]
    if jobs and jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, tasks))
    else:
        results = [_worker(t) for t in tasks]
    results.sort(key=lambda r: (r.name, r.seed if r.seed is not None else -1))
    return results, summarize(results)


def summarize(results):
    counts = {VERDICT_PASS: 0, VERDICT_FAIL: 0, VERDICT_ERROR: 0}
    for r in results:
        counts[r.verdict] += 1
    return {
        "total": len(results),
        "pass": counts[VERDICT_PASS],
        "fail": counts[VERDICT_FAIL],
        "error": counts[VERDICT_ERROR],
        "seconds": round(sum(r.seconds for r in results), 2),
    }


def exit_code(results):
    """0 all pass, 1 any fail, 2 any error (error outranks fail)."""
    verdicts = {r.verdict for r in results}
    if VERDICT_ERROR in verdicts:
        return 2
    if VERDICT_FAIL in verdicts:
        return 1
    return 0


def report_header(params="symbolic", seeds=None, **kwargs):
    return {
        "engine": __version__,
        "params": params,
        "seeds": _seed_list(params, seeds) if params == "random" else [],
        "configs": {k: kwargs.get(k) for k in ENV_KEYS},
    }


def write_report(path, results, header):
    payload = {"header": header, "results": [asdict(r) for r in results]}
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def render_table(results, summary=None):
    lines = ["%-22s %-6s %-7s %-4s %-9s %-8s %s" % (
        "name", "verdict", "method", "cut", "terms", "seconds", "note")]
    for r in results:
        note = r.witness if r.verdict != VERDICT_PASS else (r.detail or "")
        tag = r.name if r.seed is None else "%s@%d" % (r.name, r.seed)
        lines.append("%-22s %-6s %-7s %-4s %-9d %-8.2f %s" % (
            tag, r.verdict, r.method, r.cutoff, r.terms, r.seconds,
            (note or "")[:100]))
    if summary is not None:
        lines.append("total=%(total)d pass=%(pass)d fail=%(fail)d "
                     "error=%(error)d (%(seconds).1fs)" % summary)
    return "\n".join(lines)


def manifest_gaps():
    """Labels the static manifest demands but the registry does not cover,
    plus duplicated manifest labels.  Both lists empty means complete."""
    missing = [label for label in MANIFEST if not manifest_covered(label)]
    dupes = sorted({label for label in MANIFEST if MANIFEST.count(label) > 1})
    return missing, dupes
