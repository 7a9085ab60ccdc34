"""Times the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--images 256] [--repeat 3] [--end-to-end]

Sizes mirror a 28x28 MNIST two-stage run: 7x7 patches, L1=6, L2=8,
7x7 blocks at stride 3. ``--end-to-end`` additionally fits a FourierNet-2
and extracts features in two subprocesses, one per backend, selected with
FREQUENTNET_DISABLE_NUMBA.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np
from scipy import sparse

from frequentnet import _accel, kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases(n_images, rng):
    images = rng.random((n_images, 1, 28, 28))
    bank = rng.standard_normal((6, 49))
    pool = rng.standard_normal((49, 49))
    codes = rng.integers(0, 256, size=(n_images * 6, 28, 28)).astype(np.int64)
    sym = rng.standard_normal((49, 49))
    sym = sym + sym.T
    X = sparse.random(n_images * 4, 16384, density=0.004, random_state=0, format="csr")
    X.indices, X.indptr = X.indices.astype(np.int64), X.indptr.astype(np.int64)
    y = np.where(rng.random(X.shape[0]) > 0.5, 1.0, -1.0)
    qii = np.asarray(X.multiply(X).sum(axis=1)).ravel() + 1.0
    perm = rng.permutation(X.shape[0]).astype(np.int64)

    def svm(fn):
        return lambda: fn(X.indptr, X.indices, X.data, y, np.zeros(X.shape[0]), np.zeros(X.shape[1] + 1),
                          qii, perm, 1.0, 1.0)

    return {
        "correlate_bank": lambda fn: (lambda: fn(images, bank, 7, 7)),
        "patch_sumsq": lambda fn: (lambda: fn(images, pool, 7, 7)),
        "patch_gram": lambda fn: (lambda: fn(images, 7, 7)),
        "block_histogram_counts": lambda fn: (lambda: fn(codes, 7, 7, 3, 256)),
        "jacobi_eigh": lambda fn: (lambda: fn(sym, 1e-10, 100)),
        "svm_epoch": svm,
    }


END_TO_END = """
import time, numpy as np
from frequentnet import pipeline
images = np.random.default_rng(0).random(({n}, 1, 28, 28))
start = time.perf_counter()
model = pipeline.fit(pipeline.preset("FourierNet-2", 6, 8), images)
pipeline.extract_features(model, images)
print(time.perf_counter() - start)
"""


def end_to_end(n_images):
    out = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, **{_accel.ENV_FLAG: flag})
        code = END_TO_END.format(n=n_images)
        subprocess.run([sys.executable, "-c", code.replace("{n}", "8")], env=env, check=True, capture_output=True)
        proc = subprocess.run([sys.executable, "-c", code], env=env, check=True, capture_output=True, text=True)
        out[label] = float(proc.stdout.strip())
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--images", type=int, default=256)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--end-to-end", action="store_true")
    args = parser.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        sys.exit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(0)
    print(f"{'kernel':<24}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, make in cases(args.images, rng).items():
        nb, np_ = kernels.TWINS[name]
        make(nb)()  # compile outside the timing
        t_nb = best_of(make(nb), args.repeat)
        t_np = best_of(make(np_), args.repeat)
        print(f"{name:<24}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>8.1f}x")
    if args.end_to_end:
        t = end_to_end(args.images)
        print(f"{'FourierNet-2 fit+features':<24}{t['numba']:>10.2f}{t['numpy']:>10.2f}"
              f"{t['numpy'] / t['numba']:>8.1f}x")


if __name__ == "__main__":
    main()
