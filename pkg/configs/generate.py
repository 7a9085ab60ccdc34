"""Writes the shipped experiment configs. Run from the repository root:

    python3 configs/generate.py

Layout:
  mnist-variations/<dataset>/<model>.ini   one- and two-stage models per MNIST variation
  l1-sweep/<model>-<dataset>-l1-<L>.ini    one-stage accuracy against the number of filters
  cifar10/<model>.ini                      two-stage models on CIFAR-10
  desk/*.ini                               2000/2000 MNIST subsets for quick checks
"""
import configparser
from pathlib import Path

HERE = Path(__file__).parent
VARIATIONS_DIR = "data/mnist-variations"
MNIST_DIR = "data/mnist"
CIFAR_DIR = "data/cifar-10-batches-bin"

# dataset -> (train file, test file) as distributed in the MNIST-variations archives
VARIATIONS = {
    "basic": ("mnist_train.amat", "mnist_test.amat"),
    "bg-rand": ("mnist_background_random_train.amat", "mnist_background_random_test.amat"),
    "rot": (
        "mnist_all_rotation_normalized_float_train_valid.amat",
        "mnist_all_rotation_normalized_float_test.amat",
    ),
    "bg-img": ("mnist_background_images_train.amat", "mnist_background_images_test.amat"),
    "bg-img-rot": (
        "mnist_all_background_images_rotation_normalized_train_valid.amat",
        "mnist_all_background_images_rotation_normalized_test.amat",
    ),
}

# block size and stride per dataset; identical for one- and two-stage models
BLOCKS = {"basic": ("7x7", 3), **{d: ("4x4", 2) for d in ("bg-rand", "rot", "bg-img", "bg-img-rot")}}

ONE_STAGE = ("FourierNet-1", "WaveletsNet-1", "PCANet-1", "RandNet-1")
TWO_STAGE = ("FourierNet-2", "WaveletsNet-2", "PCANet-2", "RandNet-2", "FourierNet2D-2")
CIFAR_MODELS = ("FourierNet-2", "WaveletsNet-2", "PCANet-2", "Fourier-PCA", "PCA-Fourier")

TWO_STAGE_NOTE = "two-stage setup: L1=6 stage-1 filters, L2=8 stage-2 filters, 7x7 patches"


def _write(path, values, comment=None):
    parser = configparser.ConfigParser(interpolation=None)
    parser["experiment"] = {k: str(v) for k, v in values.items()}
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        if comment:
            fh.write(f"# {comment}\n")
        parser.write(fh)


def _variation(dataset):
    train, test = VARIATIONS[dataset]
    return {
        "dataset": "amat",
        "train_path": f"{VARIATIONS_DIR}/{dataset}/{train}",
        "test_path": f"{VARIATIONS_DIR}/{dataset}/{test}",
    }


def _model(name, l1, l2=None, patch="7x7", block="7x7", stride=3):
    values = {"model": name, "l1": l1}
    if l2 is not None:
        values["l2"] = l2
    values.update(patch=patch, block=block, block_stride=stride, seed=0)
    return values


def mnist_variation_configs():
    for dataset in VARIATIONS:
        block, stride = BLOCKS[dataset]
        for name in ONE_STAGE:
            yield (f"mnist-variations/{dataset}/{name}.ini",
                   {"name": f"{name}-{dataset}", **_model(name, 8, None, "7x7", block, stride), **_variation(dataset)},
                   None)
        for name in TWO_STAGE:
            yield (f"mnist-variations/{dataset}/{name}.ini",
                   {"name": f"{name}-{dataset}", **_model(name, 6, 8, "7x7", block, stride), **_variation(dataset)},
                   TWO_STAGE_NOTE)


def l1_sweep_configs():
    for name in ("FourierNet-1", "PCANet-1"):
        for dataset in ("basic", "rot"):
            block, stride = BLOCKS[dataset]
            for l1 in range(2, 9):
                yield (f"l1-sweep/{name}-{dataset}-l1-{l1}.ini",
                       {"name": f"{name}-{dataset}-l1-{l1}", **_model(name, l1, None, "7x7", block, stride),
                        **_variation(dataset)},
                       None)


def cifar_configs():
    batches = ",".join(f"{CIFAR_DIR}/data_batch_{i}.bin" for i in range(1, 6))
    for name in CIFAR_MODELS:
        yield (f"cifar10/{name}.ini",
               {"name": f"{name}-cifar10", **_model(name, 40, 5, "5x5", "8x8", 4), "dataset": "cifar10",
                "train_batches": batches, "test_batches": f"{CIFAR_DIR}/test_batch.bin"},
               "whole-volume filters: each filter spans all three colour channels (length 75)")


def desk_configs():
    idx = {
        "dataset": "mnist-idx",
        "train_images": f"{MNIST_DIR}/train-images-idx3-ubyte",
        "train_labels": f"{MNIST_DIR}/train-labels-idx1-ubyte",
        "test_images": f"{MNIST_DIR}/t10k-images-idx3-ubyte",
        "test_labels": f"{MNIST_DIR}/t10k-labels-idx1-ubyte",
        "train_subset": 2000,
        "test_subset": 2000,
    }
    for name in ONE_STAGE:
        yield (f"desk/mnist-{name}.ini", {"name": f"desk-{name}", **_model(name, 8), **idx},
               "first 2000 train / 2000 test MNIST images")
    for name in ("FourierNet-2", "PCANet-2"):
        yield (f"desk/mnist-{name}.ini", {"name": f"desk-{name}", **_model(name, 6, 8), **idx},
               "first 2000 train / 2000 test MNIST images")


def all_configs():
    yield from mnist_variation_configs()
    yield from l1_sweep_configs()
    yield from cifar_configs()
    yield from desk_configs()


def main():
    count = 0
    for rel, values, comment in all_configs():
        _write(HERE / rel, values, comment)
        count += 1
    print(f"wrote {count} configs under {HERE}")


if __name__ == "__main__":
    main()
