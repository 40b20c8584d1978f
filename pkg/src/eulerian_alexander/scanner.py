"""Seeded random Eulerian digraphs and bulk checking of coefficient-sequence properties.

Instance ``i`` of a scan with seed ``s`` is drawn from its own generator
seeded with the string ``f"{s}:{i}"``.  Any instance can therefore be
replayed on its own, and results do not depend on how work is split
across processes.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .alexander import pd, pd_direct
from .corpus import eulerian_corpus
from .errors import InputError
from .formats import serialize_digraph
from .graphs import Edge, EulerianDigraph
from .polynomials import (
    IntPoly,
    is_log_concave_no_internal_zeros,
    is_palindromic,
    is_trapezoidal,
    is_ultra_log_concave,
)

__all__ = [
    "PREDICATES",
    "ScanConfig",
    "InstanceResult",
    "ScanReport",
    "random_eulerian_digraph",
    "random_symmetric_eulerian_digraph",
    "scan",
]

PREDICATES = {
    "log_concave": is_log_concave_no_internal_zeros,
    "trapezoidal": is_trapezoidal,
    "palindromic": is_palindromic,
    "ultra_log_concave": is_ultra_log_concave,
}
# failures of these are reported as violations; the rest are only tallied
REQUIRED = ("log_concave", "trapezoidal", "palindromic")
MAX_ATTEMPTS = 1000


def _cycle_lengths(rng: random.Random, m: int, n: int, shortest: int) -> list[int]:
    parts = []
    left = m
    while left:
        hi = min(n, left)
        if hi < shortest:
            return []
        length = rng.randint(shortest, hi)
        if 0 < left - length < shortest:
            continue
        parts.append(length)
        left -= length
    return parts


def random_eulerian_digraph(n: int, m: int, seed, *, loops: bool = True) -> EulerianDigraph:
    """Union of random simple directed cycles, grown so the result stays connected.

    Every cycle after the first reuses at least one vertex already present
    and takes as many new vertices as it can.  Attempts that leave a
    vertex uncovered are retried with the same generator.  Lengths are
    at least 2 when ``loops`` is false.
    """
    if n < 1 or m < 0:
        raise InputError("need n >= 1 and m >= 0")
    shortest = 1 if loops else 2
    if n == 1:
        if m and not loops:
            raise InputError("a single vertex only carries loops")
        return EulerianDigraph(1, tuple(Edge(i, 0, 0) for i in range(m)))
    if m < n or (not loops and n == 2 and m % 2):
        raise InputError(f"no connected balanced digraph with {n} vertices and {m} edges")
    rng = random.Random(f"eulerian:{seed}:{n}:{m}:{loops}")
    for _ in range(MAX_ATTEMPTS):
        parts = _cycle_lengths(rng, m, n, shortest)
        if not parts:
            continue
        parts.sort(reverse=True)
        covered: list[int] = []
        uncovered = list(range(n))
        rng.shuffle(uncovered)
        pairs = []
        for length in parts:
            if not covered:
                verts = [uncovered.pop() for _ in range(length)]
            else:
                verts = [rng.choice(covered)]
                while len(verts) < length and uncovered:
                    verts.append(uncovered.pop())
                pool = [v for v in covered if v not in verts]
                rng.shuffle(pool)
                verts += pool[: length - len(verts)]
                if len(verts) < length:
                    break
                rng.shuffle(verts)
            covered.extend(v for v in verts if v not in covered)
            pairs += [(verts[i], verts[(i + 1) % length]) for i in range(length)]
        else:
            if uncovered:
                continue
            rng.shuffle(pairs)
            return EulerianDigraph(n, tuple(Edge(i, u, v) for i, (u, v) in enumerate(pairs)))
    raise InputError(f"could not generate a digraph with {n} vertices and {m} edges")


def random_symmetric_eulerian_digraph(n: int, m: int, seed) -> EulerianDigraph:
    """Random connected loopless multigraph with ``m / 2`` edges, each taken both ways."""
    if m % 2 or n < 1 or (n > 1 and m // 2 < n - 1) or (n == 1 and m):
        raise InputError(f"no symmetric connected digraph with {n} vertices and {m} edges")
    rng = random.Random(f"symmetric:{seed}:{n}:{m}")
    order = list(range(n))
    rng.shuffle(order)
    undirected = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    while len(undirected) < m // 2:
        u, v = rng.sample(range(n), 2)
        undirected.append((u, v))
    pairs = [p for u, v in undirected for p in ((u, v), (v, u))]
    rng.shuffle(pairs)
    return EulerianDigraph(n, tuple(Edge(i, u, v) for i, (u, v) in enumerate(pairs)))


@dataclass(frozen=True)
class ScanConfig:
    """``vertices`` and ``edges`` are inclusive ranges.

    With ``exhaustive`` the instances are the isomorphism-class corpus with
    the upper bounds of those ranges, and ``count`` and ``seed`` are unused.
    With ``symmetric`` only digraphs with i->j and j->i multiplicities equal
    are drawn.  Then divisibility by ``(1 + t)^(n-1)`` and
    ultra-log-concavity are required.  Every ``cross_check_every``-th
    instance is recomputed by tree enumeration.
    """

    vertices: tuple[int, int] = (1, 7)
    edges: tuple[int, int] = (0, 14)
    count: int = 100
    seed: int = 0
    checks: tuple[str, ...] = ("log_concave", "trapezoidal", "palindromic", "ultra_log_concave")
    jobs: int = 1
    exhaustive: bool = False
    symmetric: bool = False
    cross_check_every: int = 10

    def __post_init__(self):
        for name in self.checks:
            if name not in PREDICATES:
                raise InputError(f"unknown check {name!r}; choose from {sorted(PREDICATES)}")
        (a, b), (c, d) = self.vertices, self.edges
        if not (1 <= a <= b and 0 <= c <= d):
            raise InputError("invalid vertex or edge range")
        if self.count < 0 or self.jobs < 1 or self.cross_check_every < 0:
            raise InputError("count, jobs and cross_check_every must be nonnegative (jobs positive)")

    @property
    def required(self) -> tuple[str, ...]:
        req = [c for c in self.checks if c in REQUIRED]
        if self.symmetric and "ultra_log_concave" in self.checks:
            req.append("ultra_log_concave")
        return tuple(req)


@dataclass(frozen=True)
class InstanceResult:
    index: int
    vertices: int
    edges: int
    coeffs: tuple[int, ...]
    results: dict[str, bool]
    cross_checked: bool
    consistent: bool
    factor_ok: bool | None
    digraph: str


def _draw_size(rng: random.Random, cfg: ScanConfig) -> tuple[int, int]:
    lo_v, hi_v = cfg.vertices
    lo_e, hi_e = cfg.edges
    for _ in range(MAX_ATTEMPTS):
        n = rng.randint(lo_v, hi_v)
        if cfg.symmetric:
            lo = max(lo_e, 2 * (n - 1))
            options = [m for m in range(lo, hi_e + 1) if m % 2 == 0 and (n > 1 or m == 0)]
        else:
            lo = max(lo_e, n if n > 1 else 0)
            options = list(range(lo, hi_e + 1))
        if options:
            return n, rng.choice(options)
    raise InputError("vertex and edge ranges admit no instance")


def _instance(cfg: ScanConfig, index: int, d: EulerianDigraph | None) -> InstanceResult:
    if d is None:
        rng = random.Random(f"{cfg.seed}:{index}")
        n, m = _draw_size(rng, cfg)
        tag = f"{cfg.seed}:{index}"
        d = random_symmetric_eulerian_digraph(n, m, tag) if cfg.symmetric else random_eulerian_digraph(n, m, tag)
    p = pd(d)
    results = {name: PREDICATES[name](p) for name in cfg.checks}
    checked = cfg.cross_check_every > 0 and index % cfg.cross_check_every == 0
    consistent = pd_direct(d, 0) == p if checked else True
    factor_ok = None
    if cfg.symmetric:
        quotient, rem = p.divmod(IntPoly((1, 1)) ** (d.vertex_count - 1))
        factor_ok = rem.is_zero and len(set(quotient.coeffs)) <= 1
    return InstanceResult(
        index, d.vertex_count, len(d.edges), p.coeffs, results, checked, consistent, factor_ok, serialize_digraph(d)
    )


def _run_chunk(args) -> list[InstanceResult]:
    cfg, indices, digraphs = args
    return [_instance(cfg, i, d) for i, d in zip(indices, digraphs)]


@dataclass
class ScanReport:
    config: ScanConfig
    instances: int = 0
    passed: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    inconsistencies: list[dict] = field(default_factory=list)
    cross_checked: int = 0
    factor_verified: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations and not self.inconsistencies

    def to_json(self) -> str:
        doc = {
            # jobs is left out: the report must not depend on parallelism
            "config": {
                k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self.config).items() if k != "jobs"
            },
            "instances": self.instances,
            "passed": self.passed,
            "cross_checked": self.cross_checked,
            "factor_verified": self.factor_verified,
            "violations": self.violations,
            "inconsistencies": self.inconsistencies,
            "ok": self.ok,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        c = self.config
        mode = "exhaustive" if c.exhaustive else ("symmetric" if c.symmetric else "random")
        lines = [
            f"mode: {mode}",
            f"vertices: {c.vertices[0]}..{c.vertices[1]}  edges: {c.edges[0]}..{c.edges[1]}  seed: {c.seed}",
            f"instances: {self.instances}",
        ]
        for name in c.checks:
            tag = "required" if name in c.required else "tallied"
            lines.append(f"{name}: {self.passed.get(name, 0)}/{self.instances} ({tag})")
        if self.factor_verified is not None:
            lines.append(f"(1+t)^(n-1) factor verified: {self.factor_verified}/{self.instances}")
        lines.append(f"cross-checked by tree enumeration: {self.cross_checked}")
        lines.append(f"violations: {len(self.violations)}")
        for v in self.violations:
            lines.append(f"  #{v['index']} coeffs={' '.join(map(str, v['coeffs']))} failed={','.join(v['failed'])}")
        lines.append(f"inconsistencies: {len(self.inconsistencies)}")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def _chunks(indices, digraphs, size):
    for k in range(0, len(indices), size):
        yield indices[k : k + size], digraphs[k : k + size]


def scan(cfg: ScanConfig, artifact_dir: str | Path | None = None) -> ScanReport:
    """Run the scan; results are merged in instance order.

    Each violation is recorded with its serialised digraph.  With
    ``artifact_dir``, each is also written as a digraph file that
    ``verify`` can replay.
    """
    if cfg.exhaustive:
        digraphs = list(eulerian_corpus(cfg.vertices[1], cfg.edges[1]))
        digraphs = [d for d in digraphs if d.vertex_count >= cfg.vertices[0] and len(d.edges) >= cfg.edges[0]]
        if cfg.symmetric:
            digraphs = [d for d in digraphs if d.is_symmetric()]
    else:
        digraphs = [None] * cfg.count
    indices = list(range(len(digraphs)))
    size = max(1, len(indices) // (cfg.jobs * 8) or 1)
    work = [(cfg, i, d) for i, d in _chunks(indices, digraphs, size)]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_run_chunk, work))
    else:
        chunks = [_run_chunk(w) for w in work]

    rep = ScanReport(cfg, passed=dict.fromkeys(cfg.checks, 0))
    if cfg.symmetric:
        rep.factor_verified = 0
    required = cfg.required
    for res in (r for chunk in chunks for r in chunk):
        rep.instances += 1
        rep.cross_checked += res.cross_checked
        for name, ok in res.results.items():
            rep.passed[name] += ok
        failed = [name for name in required if not res.results[name]]
        if cfg.symmetric:
            rep.factor_verified += bool(res.factor_ok)
            if not res.factor_ok:
                failed.append("symmetric_factor")
        record = {
            "index": res.index,
            "seed": None if cfg.exhaustive else f"{cfg.seed}:{res.index}",
            "vertices": res.vertices,
            "edges": res.edges,
            "coeffs": list(res.coeffs),
            "failed": failed,
            "digraph": res.digraph,
        }
        if failed:
            rep.violations.append(record)
        if not res.consistent:
            rep.inconsistencies.append(record)
    if artifact_dir is not None and rep.violations:
        out = Path(artifact_dir)
        out.mkdir(parents=True, exist_ok=True)
        for v in rep.violations:
            header = f"# scan violation #{v['index']} seed={v['seed']} coeffs={' '.join(map(str, v['coeffs']))}\n"
            (out / f"violation_{v['index']:06d}.txt").write_text(header + v["digraph"], encoding="utf-8")
    return rep
