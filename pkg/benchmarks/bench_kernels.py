"""Compare the compiled and pure-Python grid kernels on fold/filter/query workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import importlib
import random
import timeit

from stinv import _kernels_py, kernels
from stinv.fold import IterationPath, fold_space, owner_point_counter
from stinv.geometry import point_semantics
from stinv.normalize import normalize_owner_occupied
from stinv.terms import BIGAND, IMPLIES, OccupyBox, Owner, TimeInterval


def build_model(seed=0, clauses=40, extent=400):
    rng = random.Random(seed)
    imps = []
    for _ in range(clauses):
        x, y = rng.randint(0, extent), rng.randint(0, extent)
        w, h = rng.randint(10, 120), rng.randint(10, 120)
        guard = Owner(rng.choice(["cloud", "mountain", "lake"]))
        if rng.random() < 0.5:
            guard = BIGAND([guard, TimeInterval(0, rng.randint(0, 10))])
        imps.append(IMPLIES(guard, OccupyBox(x, y, x + w, y + h)))
    return BIGAND(imps)


def workloads(model):
    norm = normalize_owner_occupied(model)
    path = IterationPath(OccupyBox(0, 0, 49, 49), OccupyBox(450, 450, 499, 499), (50, 50))
    count = owner_point_counter("cloud")
    return {
        "fold_space (10 windows of 50x50)": lambda: fold_space(norm, 0, path, count),
        "point_semantics (t=0)": lambda: point_semantics(model, 0),
        "clip_union (raw kernel)": lambda: kernels.clip_union(
            [c for c in [(0, 0, 300, 300), (100, 100, 450, 450), (400, 0, 500, 90)]]),
    }


def use(backend):
    for name in ("clip_union", "count_in_box", "expand_box", "BACKEND"):
        setattr(kernels, name, getattr(backend, name))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = {"python": _kernels_py}
    try:
        backends["cython"] = importlib.import_module("stinv._kernels")
    except ImportError:
        print("compiled kernels not built; timing the Python backend only")

    model = build_model()
    results = {}
    for label, mod in backends.items():
        use(mod)
        for name, fn in workloads(model).items():
            results[(name, label)] = min(timeit.repeat(fn, number=1, repeat=args.repeat))

    names = list(workloads(model))
    print(f"{'workload':38} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name in names:
        row = [results[(name, b)] for b in backends]
        speed = f"{row[0] / row[1]:8.1f}x" if len(row) == 2 else ""
        print(f"{name:38} " + " ".join(f"{t * 1e3:8.2f}ms" for t in row) + f"  {speed}")


if __name__ == "__main__":
    main()
