#!/usr/bin/env python3
"""Generate a tiny, valid MNIST-layout IDX fixture for offline testing.

Writes the four standard files (train/t10k x images/labels) into the
directory given as argv[1]. Images are random noise; labels include
enough copies of digit 2 for the rotated-digit stream to draw from.
"""
import os
import random
import struct
import sys

TRAIN_N, TRAIN_TARGET = 40, 25
TEST_N, TEST_TARGET = 20, 12


def write_images(path: str, n: int) -> None:
    with open(path, "wb") as f:
        f.write(struct.pack(">BBBB", 0, 0, 0x08, 3))
        f.write(struct.pack(">III", n, 28, 28))
        f.write(bytes(random.randrange(256) for _ in range(n * 28 * 28)))


def write_labels(path: str, labs: list[int]) -> None:
    with open(path, "wb") as f:
        f.write(struct.pack(">BBBB", 0, 0, 0x08, 1))
        f.write(struct.pack(">I", len(labs)))
        f.write(bytes(labs))


def label_set(n: int, target_count: int) -> list[int]:
    labs = [2] * target_count
    labs += [random.choice([0, 1, 3, 4, 5]) for _ in range(n - target_count)]
    random.shuffle(labs)
    return labs


def main() -> None:
    if len(sys.argv) != 2:
        sys.exit(f"usage: {sys.argv[0]} <output-dir>")
    out = sys.argv[1]
    os.makedirs(out, exist_ok=True)
    random.seed(3)
    write_images(os.path.join(out, "train-images-idx3-ubyte"), TRAIN_N)
    write_labels(os.path.join(out, "train-labels-idx1-ubyte"), label_set(TRAIN_N, TRAIN_TARGET))
    write_images(os.path.join(out, "t10k-images-idx3-ubyte"), TEST_N)
    write_labels(os.path.join(out, "t10k-labels-idx1-ubyte"), label_set(TEST_N, TEST_TARGET))
    print(f"fixture written to {out}")


if __name__ == "__main__":
    main()
