"""
Extension-field dumps for external plotting.

CSV: two comment lines `# box lo_1 hi_1 ... lo_d hi_d` and `# resolution n_1 ... n_d`,
a header `x_1,...,x_d,re,im`, then one record per grid point (last axis fastest).

Binary (little endian): magic b"TLFD", version u32, d u32, resolution u32 x d,
box f64 x 2d (lo, hi per axis), then (re, im) f64 pairs in the same point order.

@Time ： 2026-10-18
"""
import csv
import os
import struct
from pathlib import Path
from typing import List, Tuple

import numpy as np

from services.oscillatory.extension import ExtensionField
from services.oscillatory.grid import GridSpec
from utils.errors import ConfigError
from utils.logger import Logger

logger = Logger(__name__)

MAGIC = b"TLFD"
VERSION = 1


def _header(grid: GridSpec):
    return [list(axis) for axis in grid.box], list(grid.resolution)


def write_field_csv(path, field: ExtensionField) -> Path:
    path = Path(path)
    os.makedirs(path.parent, exist_ok=True)
    box, resolution = _header(field.grid)
    points = field.grid.points()
    values = np.asarray(field.values).ravel()
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write("# box " + " ".join(repr(float(v)) for axis in box for v in axis) + "\n")
        f.write("# resolution " + " ".join(str(n) for n in resolution) + "\n")
        writer = csv.writer(f)
        writer.writerow([f"x_{j + 1}" for j in range(field.grid.d)] + ["re", "im"])
        for point, value in zip(points, values):
            writer.writerow([repr(float(c)) for c in point] + [repr(float(value.real)), repr(float(value.imag))])
    logger.info(f"Field CSV with {values.size} records written to {path}")
    return path


def write_field_binary(path, field: ExtensionField) -> Path:
    path = Path(path)
    os.makedirs(path.parent, exist_ok=True)
    box, resolution = _header(field.grid)
    d = field.grid.d
    header = MAGIC + struct.pack(f"<II{d}I{2 * d}d", VERSION, d, *resolution, *[v for axis in box for v in axis])
    payload = np.asarray(field.values, dtype="<c16").ravel()
    with open(path, "wb") as f:
        f.write(header)
        f.write(payload.tobytes())
    logger.info(f"Field binary with {payload.size} records written to {path}")
    return path


def read_field_csv(path) -> Tuple[List[Tuple[float, float]], List[int], np.ndarray]:
    """(box, resolution, values shaped by resolution)"""
    with open(path, "r", encoding="utf-8") as f:
        box_line = f.readline().split()
        resolution_line = f.readline().split()
        if box_line[:2] != ["#", "box"] or resolution_line[:2] != ["#", "resolution"]:
            raise ConfigError(f"{path} is not a field CSV dump", path=str(path))
        bounds = [float(v) for v in box_line[2:]]
        resolution = [int(v) for v in resolution_line[2:]]
        reader = csv.reader(f)
        next(reader)
        records = [(float(row[-2]), float(row[-1])) for row in reader if row]
    box = [(bounds[2 * j], bounds[2 * j + 1]) for j in range(len(resolution))]
    data = np.array(records, dtype=float).reshape(-1, 2)
    values = (data[:, 0] + 1j * data[:, 1]).reshape(resolution)
    return box, resolution, values


def read_field_binary(path) -> Tuple[List[Tuple[float, float]], List[int], np.ndarray]:
    """(box, resolution, values shaped by resolution)"""
    with open(path, "rb") as f:
        blob = f.read()
    if blob[:4] != MAGIC:
        raise ConfigError(f"{path} is not a field binary dump", path=str(path))
    version, d = struct.unpack_from("<II", blob, 4)
    if version != VERSION:
        raise ConfigError(f"unsupported field dump version {version}", path=str(path))
    offset = 12
    resolution = list(struct.unpack_from(f"<{d}I", blob, offset))
    offset += 4 * d
    bounds = struct.unpack_from(f"<{2 * d}d", blob, offset)
    offset += 16 * d
    box = [(bounds[2 * j], bounds[2 * j + 1]) for j in range(d)]
    values = np.frombuffer(blob, dtype="<c16", offset=offset).astype(complex).reshape(resolution)
    return box, resolution, values
