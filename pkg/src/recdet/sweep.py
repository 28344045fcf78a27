"""Verification sweeps: configuration, execution and the JSON report."""
from __future__ import annotations

import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .engines import ENGINES
from .errors import ParseError
from .identities import (
    THEOREMS,
    CorollaryGrid,
    Thm4Variant,
    Verdict,
    adjudicate_constants,
    adjudicate_theorem4,
    catalan,
    check,
    corollary1_j,
    corollary1_sij,
    corollary_suite,
    random_profile,
)
from .matrices import IdentityCase, IndexProfile
from .sequences import NamedFamily, RecurrenceSpec, custom, favard, parse_family

SWEEP_THEOREMS = ("1",) + THEOREMS
COROLLARIES = ("C2", "C3", "C4", "C5", "C6")
_COROLLARY_SHORTHAND = {"C2": "fib", "C3": "lucas", "C4": "chebT", "C5": "chebS"}


def parse_int_list(text: str) -> List[int]:
    """'a..b' (inclusive), 'a,b,c' or a single integer."""
    s = text.strip()
    m = re.fullmatch(r"(-?\d+)\s*\.\.\s*(-?\d+)", s)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise ParseError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        values = [int(v) for v in s.split(",") if v.strip()]
    except ValueError as exc:
        raise ParseError(f"not an integer range or list: {text!r}") from exc
    if not values:
        raise ParseError(f"empty integer list {text!r}")
    return values


def random_spec(rng: random.Random, bound: int = 3, max_den: int = 3) -> RecurrenceSpec:
    """Small random rational spec with c != 0."""
    def draw(nonzero=False):
        while True:
            v = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
            if v or not nonzero:
                return v
    return RecurrenceSpec(draw(), draw(), draw(), draw(), draw(), draw(nonzero=True))


def random_favard(rng: random.Random, bound: int = 3) -> NamedFamily:
    def draw(nonzero=False):
        while True:
            v = Fraction(rng.randint(-bound, bound), rng.randint(1, 2))
            if v or not nonzero:
                return v
    return favard(draw(True), draw(), draw(), draw(True))


@dataclass
class SweepConfig:
    families: List[str] = field(default_factory=lambda: ["fib", "lucas", "chebT", "chebS"])
    random_specs: int = 0
    theorems: List[str] = field(default_factory=lambda: list(SWEEP_THEOREMS))
    corollaries: List[str] = field(default_factory=list)
    s_values: List[int] = field(default_factory=lambda: [-1, 0, 1])
    k_values: List[int] = field(default_factory=lambda: [-1, 0, 1, 2])
    n_values: List[int] = field(default_factory=lambda: [-1, 0, 1, 2])
    m_values: List[int] = field(default_factory=lambda: [1, 2])
    d_values: Optional[List[int]] = None
    ij_values: List[int] = field(default_factory=lambda: [-2, -1, 0, 1, 2])
    profile_mode: str = "random"
    profiles: int = 2
    profile_bound: int = 3
    x_points: List[str] = field(default_factory=list)
    engine: str = "bareiss"
    output_format: str = "text"
    seed: int = 0
    jobs: int = 1

    def validate(self):
        for name in ("s_values", "k_values", "n_values", "m_values", "ij_values"):
            if not getattr(self, name):
                raise ParseError(f"{name} must be nonempty")
        if self.d_values is not None and not self.d_values:
            raise ParseError("d_values must be nonempty")
        if any(m < 1 for m in self.m_values):
            raise ParseError("m values must be >= 1")
        if self.d_values and any(d < 1 for d in self.d_values):
            raise ParseError("d values must be >= 1")
        for t in self.theorems:
            if t not in SWEEP_THEOREMS:
                raise ParseError(f"unknown theorem {t!r}")
        for c in self.corollaries:
            if c not in COROLLARIES:
                raise ParseError(f"unknown corollary {c!r}")
        if self.profile_mode not in ("fixed", "random"):
            raise ParseError("profile mode must be 'fixed' or 'random'")
        if self.engine not in ENGINES + ("all",):
            raise ParseError(f"unknown engine {self.engine!r}")
        if self.output_format not in ("text", "json"):
            raise ParseError("format must be text or json")
        if self.seed < 0 or self.jobs < 1 or self.profiles < 1 or self.random_specs < 0:
            raise ParseError("seed, jobs, profiles and random_specs must be nonnegative (jobs, profiles >= 1)")
        for f in self.families:
            parse_family(f)
        for x in self.x_points:
            Fraction(x)
        return self


# --- config files -------------------------------------------------------------

_LIST_INT_KEYS = {"s": "s_values", "k": "k_values", "n": "n_values", "m": "m_values",
                  "d": "d_values", "ij": "ij_values"}


def load_config(text: str, base: Optional[SweepConfig] = None) -> SweepConfig:
    """Flat ``key = value`` lines; list values are whitespace separated and
    integer ranges use the same syntax as the command line."""
    cfg = base or SweepConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"config line {lineno}: expected key = value")
        key, value = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_").lower()
        try:
            apply_option(cfg, key, value)
        except (ValueError, ParseError) as exc:
            raise ParseError(f"config line {lineno}: {exc}") from exc
    return cfg


_WORD_LIST_KEYS = {"family": "families", "families": "families", "theorem": "theorems",
                   "theorems": "theorems", "corollary": "corollaries", "corollaries": "corollaries",
                   "x": "x_points", "x_points": "x_points"}
_INT_KEYS = ("random_specs", "profiles", "profile_bound", "seed", "jobs")
_STR_KEYS = {"engine": "engine", "profile_mode": "profile_mode", "format": "output_format"}


def apply_option(cfg: SweepConfig, key: str, value: str):
    if key in _LIST_INT_KEYS:
        setattr(cfg, _LIST_INT_KEYS[key], parse_int_list(value))
    elif key in _WORD_LIST_KEYS:
        setattr(cfg, _WORD_LIST_KEYS[key], value.split())
    elif key in _INT_KEYS:
        setattr(cfg, key, int(value))
    elif key in _STR_KEYS:
        setattr(cfg, _STR_KEYS[key], value)
    else:
        raise ParseError(f"unknown config key {key!r}")


# --- execution ------------------------------------------------------------------

def _families(cfg: SweepConfig, rng: random.Random) -> List[NamedFamily]:
    fams = [parse_family(f) for f in cfg.families]
    fams += [custom(random_spec(rng)) for _ in range(cfg.random_specs)]
    return fams


def _engines(cfg: SweepConfig, theorem: str) -> Sequence[str]:
    if cfg.engine == "all":
        return ENGINES
    if theorem == "3.5" and cfg.engine == "bareiss":
        # reciprocal matrices live in the rational-function field
        return ("gauss",)
    return (cfg.engine,)


def _profiles(cfg: SweepConfig, rng: random.Random, m: int) -> List[IndexProfile]:
    if cfg.profile_mode == "fixed":
        return [IndexProfile((0,) * m, (1,) * m)]
    return [random_profile(rng, m, cfg.profile_bound) for _ in range(cfg.profiles)]


def build_tasks(cfg: SweepConfig):
    """Expand a config into a deterministic task list (all randomness drawn here)."""
    rng = random.Random(cfg.seed)
    families = _families(cfg, rng)
    xs = [Fraction(x) for x in cfg.x_points] or [None]
    tasks = []
    for fam in families:
        spec = fam.spec
        if "1" in cfg.theorems:
            # a second sequence sharing (a, b, c) for the two-sequence identity
            other = random_spec(rng)
            partner = RecurrenceSpec(other.p, other.q, other.r, spec.a, spec.b, spec.c)
            tasks.append(("scalar", fam.name, spec, partner, list(cfg.s_values), list(cfg.ij_values)))
        for theorem in ("2", "3", "3.5"):
            if theorem not in cfg.theorems:
                continue
            for s in cfg.s_values:
                for k in cfg.k_values:
                    for n in cfg.n_values:
                        for m in cfg.m_values:
                            profs = _profiles(cfg, rng, m) if theorem == "3" else [None]
                            for prof in profs:
                                case = IdentityCase(spec, s, k, n, m, profile=prof)
                                for x in xs:
                                    for eng in _engines(cfg, theorem):
                                        tasks.append(("theorem", fam.name, theorem, case, eng, x, None))
        if "4" in cfg.theorems:
            for n in cfg.n_values:
                for m in cfg.m_values:
                    ds = cfg.d_values if cfg.d_values is not None else range(1, m + 2)
                    for d in ds:
                        case = IdentityCase(spec, 0, 1, n, m, d)
                        for x in xs:
                            for eng in _engines(cfg, "4"):
                                for variant in Thm4Variant:
                                    tasks.append(("theorem", fam.name, "4", case, eng, x, variant))
    for which in cfg.corollaries:
        fam = random_favard(rng) if which == "C6" else parse_family(_COROLLARY_SHORTHAND[which])
        grid = CorollaryGrid(
            s_values=list(cfg.s_values), k_values=list(cfg.k_values), n_values=list(cfg.n_values),
            m_values=list(cfg.m_values), profiles_per_point=cfg.profiles,
            profile_bound=cfg.profile_bound, thm4_n_values=list(cfg.n_values),
            thm4_m_values=list(cfg.m_values),
            engine=cfg.engine if cfg.engine != "all" else "bareiss", seed=cfg.seed,
        )
        tasks.append(("corollary", fam, which, grid))
    return tasks


def run_task(task) -> List[Verdict]:
    kind = task[0]
    if kind == "scalar":
        _, name, spec, partner, s_values, ij = task
        out = []
        for s in s_values:
            for i in ij:
                for j in ij:
                    out.append(catalan(spec, spec, s, i, j, family=name))
                    out.append(catalan(spec, partner, s, i, j, family=f"{name} x {partner.literal()}"))
                    out.append(corollary1_sij(spec, s, i, j, family=name))
        for j in ij:
            out.append(corollary1_j(spec, j, family=name))
        return out
    if kind == "theorem":
        _, name, theorem, case, eng, x, variant = task
        kwargs = {"variant": variant} if variant is not None else {}
        return [check(theorem, case, eng, x=x, family=name, **kwargs)]
    if kind == "corollary":
        _, fam, which, grid = task
        return corollary_suite(fam, which, grid)
    raise ValueError(f"unknown task kind {kind!r}")


def _sort_key(v: Verdict):
    def norm(val):
        if val is None:
            return (0, 0)
        if isinstance(val, list):
            return (1, tuple(val))
        if isinstance(val, int):
            return (1, val)
        return (2, str(val))

    p = v.params
    order = ("s", "k", "n", "m", "d", "i", "j", "d_seq", "e_seq", "x")
    return (
        SWEEP_THEOREMS.index(v.theorem) if v.theorem in SWEEP_THEOREMS else len(SWEEP_THEOREMS),
        v.theorem, v.corollary or "", v.family,
        tuple(norm(p.get(k)) for k in order),
        v.engine or "", v.variant or "", v.constant or "",
    )


def run_verdicts(cfg: SweepConfig) -> List[Verdict]:
    tasks = build_tasks(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (4 * cfg.jobs))))
    else:
        chunks = [run_task(t) for t in tasks]
    verdicts = [v for chunk in chunks for v in chunk]
    verdicts.sort(key=_sort_key)
    return verdicts


def summarize(verdicts: Sequence[Verdict]) -> dict:
    summary = {
        "total": len(verdicts),
        "equal": sum(v.status == "equal" for v in verdicts),
        "degenerate_ok": sum(v.status == "degenerate-ok" for v in verdicts),
        "unequal": sum(v.unexpected for v in verdicts),
        "expected_unequal": sum(v.status == "unequal" and v.whitelisted for v in verdicts),
        "errors": sum(v.status == "error" for v in verdicts),
        "fallbacks": sum(v.fallback_used for v in verdicts),
    }
    thm4 = adjudicate_theorem4(verdicts)
    summary["thm4_variant_supported"] = thm4["supported"] if any(v.theorem == "4" for v in verdicts) else "not-run"
    summary["thm4_adjudication"] = thm4
    constants = {}
    for which in COROLLARIES:
        if any(v.corollary == which for v in verdicts):
            constants[which] = adjudicate_constants(verdicts, which)
    summary["corollary_constants"] = constants
    summary["corollary5_constant_supported"] = constants.get("C5", {}).get("supported", "not-run")
    return summary


@dataclass
class SweepReport:
    header: dict
    verdicts: List[Verdict]
    summary: dict

    @property
    def exit_code(self) -> int:
        """1 when any non-whitelisted inequality occurred."""
        return 1 if self.summary["unequal"] else 0

    def to_json(self) -> dict:
        return {
            "header": self.header,
            "verdicts": [v.to_json() for v in self.verdicts],
            "summary": self.summary,
        }


def run_sweep(cfg: SweepConfig) -> SweepReport:
    cfg.validate()
    verdicts = run_verdicts(cfg)
    header = {"tool": "recdet", "version": __version__, "seed": cfg.seed, "config": _config_json(cfg)}
    return SweepReport(header, verdicts, summarize(verdicts))


def _config_json(cfg: SweepConfig) -> dict:
    data = asdict(cfg)
    data.pop("jobs")
    data.pop("output_format")
    return data
