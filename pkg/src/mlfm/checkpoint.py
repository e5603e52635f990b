"""Bit-exact named-tensor container.

Layout (little endian): magic b"MLFM", u32 version (=1), u32 entry count;
per entry u16 name length, UTF-8 name, u8 dtype code (0=f32, 1=f64),
u8 rank, u32 per extent, then the raw values.  Readers reject unknown
versions and trailing garbage.
"""

import struct

import numpy as np

from .tensor import Tensor

MAGIC = b"MLFM"
VERSION = 1
_DTYPE_CODE = {"float32": 0, "float64": 1}
_CODE_DTYPE = {0: np.float32, 1: np.float64}


class CheckpointError(ValueError):
    pass


def dumps(params):
    """Serializes {name: Tensor} in name order (bit-stable)."""
    chunks = [MAGIC, struct.pack("<II", VERSION, len(params))]
    for name in params:
        t = params[name]
        data = t.data if isinstance(t, Tensor) else np.asarray(t)
        code = _DTYPE_CODE[str(data.dtype)]
        raw = name.encode("utf-8")
        chunks.append(struct.pack("<H", len(raw)))
        chunks.append(raw)
        chunks.append(struct.pack("<BB", code, data.ndim))
        chunks.append(struct.pack(f"<{data.ndim}I", *data.shape))
        le = np.dtype(data.dtype).newbyteorder("<")
        chunks.append(np.ascontiguousarray(data).astype(le, copy=False).tobytes())
    return b"".join(chunks)


def loads(blob):
    if blob[:4] != MAGIC:
        raise CheckpointError("bad magic; not a checkpoint")
    version, count = struct.unpack_from("<II", blob, 4)
    if version != VERSION:
        raise CheckpointError(f"unsupported checkpoint version {version}")
    off = 12
    out = {}
    for _ in range(count):
        (nlen,) = struct.unpack_from("<H", blob, off)
        off += 2
        name = blob[off:off + nlen].decode("utf-8")
        off += nlen
        code, rank = struct.unpack_from("<BB", blob, off)
        off += 2
        if code not in _CODE_DTYPE:
            raise CheckpointError(f"unknown dtype code {code} for {name!r}")
        shape = struct.unpack_from(f"<{rank}I", blob, off)
        off += 4 * rank
        dtype = _CODE_DTYPE[code]
        nbytes = int(np.prod(shape, dtype=np.int64)) * dtype().itemsize
        arr = np.frombuffer(blob, dtype=np.dtype(dtype).newbyteorder("<"),
                            count=int(np.prod(shape, dtype=np.int64)), offset=off)
        off += nbytes
        out[name] = Tensor(arr.astype(dtype).reshape(shape))
    if off != len(blob):
        raise CheckpointError(f"{len(blob) - off} trailing bytes after last entry")
    return out


def save(path, params):
    with open(path, "wb") as fh:
        fh.write(dumps(params))


def load(path):
    with open(path, "rb") as fh:
        return loads(fh.read())
