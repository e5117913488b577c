"""Bit-exact codecs: octal-packed generator matrices, plain binary row
lists, the classification database file format, and JSON reports.

Octal convention: the k rows of the non-identity block M of a generator
[I_k | M] are concatenated m_1 || ... || m_k, chunked into octal digits
of 3 bits each read most-significant-first (0=000 .. 7=111); a final
remainder of 1 or 2 bits is written as the letters a=0, b=1.  Row ints
in database files are serialized as little-endian bytes in hex, so byte
0 carries columns 0..7 (column 0 in its lowest bit).
"""

from __future__ import annotations

import json
import os
import tempfile

from .classify import CodeDB
from .code import LinearCode, make_code
from .gf2 import BitMatrix

OCTAL_DIGITS = "01234567"
LETTER_BITS = {"a": "0", "b": "1"}
BITS_LETTER = {v: k for k, v in LETTER_BITS.items()}


def decode_octal(s: str, n: int, k: int) -> BitMatrix:
    """Decode the k x (n-k) block M from its octal string."""
    want = k * (n - k)
    bits = []
    letters = 0
    for ch in s:
        if ch in OCTAL_DIGITS:
            if letters:
                raise ValueError(f"octal digit after remainder letter in {s!r}")
            bits.append(format(int(ch, 8), "03b"))
        elif ch in LETTER_BITS:
            letters += 1
            if letters > 2:
                raise ValueError(f"more than two remainder letters in {s!r}")
            bits.append(LETTER_BITS[ch])
        else:
            raise ValueError(f"bad symbol {ch!r} in octal string")
    flat = "".join(bits)
    if len(flat) != want:
        raise ValueError(
            f"octal string yields {len(flat)} bits, need {want} for k={k}, n={n}")
    width = n - k
    rows = [flat[i * width:(i + 1) * width] for i in range(k)]
    return BitMatrix.from_rows([[int(c) for c in r] for r in rows])


def encode_octal(m: BitMatrix) -> str:
    """Inverse of decode_octal for a k x (n-k) block."""
    flat = "".join("".join(str(m.get(i, j)) for j in range(m.cols))
                   for i in range(m.rows))
    out = []
    i = 0
    while i + 3 <= len(flat):
        out.append(OCTAL_DIGITS[int(flat[i:i + 3], 2)])
        i += 3
    for c in flat[i:]:
        out.append(BITS_LETTER[c])
    return "".join(out)


def parse_binary_rows(rows, k: int | None = None) -> BitMatrix:
    """Rows of 0/1 characters into a BitMatrix (row i, char j -> bit (i,j))."""
    rows = list(rows)
    if k is not None and len(rows) != k:
        raise ValueError(f"expected {k} rows, got {len(rows)}")
    if not rows:
        raise ValueError("no rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged rows")
    if any(c not in "01" for r in rows for c in r):
        raise ValueError("rows must be binary strings")
    return BitMatrix.from_rows([[int(c) for c in r] for r in rows])


def systematic_code(m: BitMatrix) -> LinearCode:
    """The code generated by [I_k | M]."""
    return make_code(BitMatrix.identity(m.rows).hstack(m))


def code_from_octal(s: str, n: int, k: int) -> LinearCode:
    return systematic_code(decode_octal(s, n, k))


# -- classification database files ----------------------------------------------


def _row_hex(row: int, cols: int) -> str:
    return row.to_bytes((cols + 7) // 8, "little").hex()


def _row_unhex(h: str) -> int:
    return int.from_bytes(bytes.fromhex(h), "little")


def codedb_dumps(db: CodeDB) -> str:
    lines = [f"{db.n} {db.k} {db.d} {db.count} {db.method}"]
    for key, rows in db.records:
        lines.append(key.hex() + ":" + " ".join(_row_hex(r, db.n) for r in rows))
    return "\n".join(lines) + "\n"


def codedb_loads(text: str) -> CodeDB:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty database file")
    head = lines[0].split()
    if len(head) != 5:
        raise ValueError(f"bad header {lines[0]!r}")
    n, k, d, count = (int(x) for x in head[:4])
    method = head[4]
    from .gf2 import rref
    records = []
    for ln in lines[1:]:
        key_hex, _, rows_part = ln.partition(":")
        rows = tuple(_row_unhex(h) for h in rows_part.split())
        if len(rows) != k:
            raise ValueError(f"record with {len(rows)} rows, expected {k}")
        if rref(BitMatrix(k, n, rows)).rank != k:
            raise ValueError("record generator is rank deficient")
        records.append((bytes.fromhex(key_hex), rows))
    if len(records) != count:
        raise ValueError(f"header count {count} != {len(records)} records")
    keys = [r[0] for r in records]
    if keys != sorted(keys):
        raise ValueError("records are not key-sorted")
    return CodeDB(n, k, d, method, tuple(records))


def save_codedb(db: CodeDB, path: str):
    """Single-writer atomic write (tempfile + rename)."""
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".codedb-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(codedb_dumps(db))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_codedb(path: str) -> CodeDB:
    with open(path) as fh:
        return codedb_loads(fh.read())


# -- JSON reports ------------------------------------------------------------------
#
# Field names are frozen; see docs/report_schema.md.


def measured_block(code: LinearCode) -> dict:
    hull, lcd = code.lcd_status()
    return {
        "n": code.n,
        "k": code.k,
        "d": code.min_weight(),
        "hull_dim": hull,
        "is_lcd": lcd,
        "weight_enumerator": {str(w): c for w, c in code.weight_enumerator().coeffs},
    }


def code_report(code: LinearCode, claimed: dict | None = None,
                params: dict | None = None) -> dict:
    measured = measured_block(code)
    report = {
        "params": params or {"n": code.n, "k": code.k},
        "measured": measured,
        "claimed": claimed,
        "match": None,
    }
    if claimed is not None:
        report["match"] = all(measured.get(key) == val
                              for key, val in claimed.items())
    return report


def census_report(census) -> dict:
    return {
        "params": {"n": census.n, "k": census.k, "d": census.d},
        "count": census.count,
        "lcd_count": census.lcd_count,
        "lcd_keys": [key.hex() for key in census.lcd_keys],
    }


def bounds_report(n: int, k: int, entry, griesmer: int,
                  closed_form: int | None) -> dict:
    return {
        "params": {"n": n, "k": k},
        "griesmer": griesmer,
        "closed_form": closed_form,
        "lcd_known": entry.exact if entry.status == "exact" else list(entry.values),
        "lcd_known_status": entry.status,
        "provenance": entry.provenance,
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
