"""Least-N tables over (discriminant, degree) cells, as text and CSV."""
from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor

from .residue import HALF_LOG2, VARIANTS, Signature, least_n

DEGREES = (2, 6, 10, 20, 50)
DISC_EXPONENTS = (5, 10, 20, 50, 100, 200)
# the largest degree a field with |d_K| = 10^e can have, among DEGREES
MAX_DEGREE = {5: 6, 10: 10, 20: 10, 50: 20, 100: 50, 200: 50}

CELLS = tuple((e, n) for e in DISC_EXPONENTS for n in DEGREES if n <= MAX_DEGREE[e])

# Belabas-Friedman least N, reprinted reference data (not computed here)
REFERENCE_BF = {
    (5, 2): 1619, (5, 6): 1632,
    (10, 2): 3169, (10, 6): 3181, (10, 10): 3194,
    (20, 2): 6838, (20, 6): 6850, (20, 10): 6861,
    (50, 2): 21619, (50, 6): 21629, (50, 10): 21639, (50, 20): 21665,
    (100, 2): 56332, (100, 6): 56341, (100, 10): 56351, (100, 20): 56374, (100, 50): 56445,
    (200, 2): 156151, (200, 6): 156160, (200, 10): 156169, (200, 20): 156191, (200, 50): 156256,
}

LAYOUTS = {
    "m1": ("bas1", "imp1"),
    "m2": ("bas2", "imp2"),
    "bf-bas": ("BF", "bas1", "bas2"),
    "bf-imp": ("BF", "imp1", "imp2"),
}


def workers() -> int:
    env = os.environ.get("GRHPSI_WORKERS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"GRHPSI_WORKERS must be an integer, got {env!r}") from None
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def cell_least_n(args) -> int:
    e, n, variant, target = args
    return least_n(Signature(e * math.log(10), n), variant=variant, target=target)


def compute_cells(variants=VARIANTS, target: float = HALF_LOG2, cells=CELLS, n_workers: int | None = None):
    """{(e, n, variant): N}; every cell takes the worst signature of its degree."""
    jobs = [(e, n, v, target) for e, n in cells for v in variants]
    n_workers = workers() if n_workers is None else n_workers
    if n_workers <= 1 or len(jobs) == 1:
        res = [cell_least_n(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(n_workers, len(jobs))) as ex:
            res = list(ex.map(cell_least_n, jobs))
    return {(e, n, v): N for (e, n, v, _), N in zip(jobs, res)}


def to_csv(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["disc_exponent", "degree", "variant", "N"])
    for e, n in CELLS:
        for v in VARIANTS:
            if (e, n, v) in results:
                w.writerow([e, n, v, results[e, n, v]])
    return buf.getvalue()


def from_csv(text: str):
    rows = csv.DictReader(io.StringIO(text))
    return {(int(r["disc_exponent"]), int(r["degree"]), r["variant"]): int(r["N"]) for r in rows}


def _value(results, e, n, col):
    if col == "BF":
        return REFERENCE_BF.get((e, n))
    return results.get((e, n, col))


def format_layout(results, layout: str) -> str:
    cols = LAYOUTS[layout]
    w = 7
    head1 = "disc     |" + "|".join(f"{'n=' + str(n):^{len(cols) * (w + 1)}}" for n in DEGREES) + "|"
    head2 = "         |" + "|".join("".join(f"{c:>{w + 1}}" for c in cols) for _ in DEGREES) + "|"
    lines = [head1, head2, "-" * len(head2)]
    for e in DISC_EXPONENTS:
        parts = []
        for n in DEGREES:
            vals = [_value(results, e, n, c) for c in cols]
            parts.append("".join(f"{('-' if v is None else v):>{w + 1}}" for v in vals))
        lines.append(f"{'10^' + str(e):<9}|" + "|".join(parts) + "|")
    return "\n".join(lines) + "\n"


def format_all(results) -> str:
    titles = {
        "m1": "least N, first smoothing: basic vs improved",
        "m2": "least N, second smoothing: basic vs improved",
        "bf-bas": "least N: Belabas-Friedman (reference data) vs basic bounds",
        "bf-imp": "least N: Belabas-Friedman (reference data) vs improved bounds",
    }
    return "\n".join(f"{titles[k]}\n{format_layout(results, k)}" for k in LAYOUTS)


def read_reference(name: str = "least_n_published.csv"):
    """Published least-N values shipped with the package."""
    from importlib.resources import files

    return from_csv(files("grhpsi.data").joinpath(name).read_text())
