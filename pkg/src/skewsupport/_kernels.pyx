# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the enumeration kernels in _kernels_py.

Same contracts as the pure versions.  Shapes are tiny (n <= 14 boxes in
practice, hard cap 20 boxes / 24 rows here), so fixed-size C scratch arrays
are plenty.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "compiled"

cdef enum:
    MAXROWS = 24
    MAXBOXES = 20

ctypedef long long i64


cdef struct DescentState:
    int nrows
    int n
    int* inner
    int* outer
    int* nxt
    i64* tally          # indexed by descent bitmask


cdef void _descend(DescentState* st, int step, int prev_row, int mask) noexcept:
    cdef int row, col, nmask
    if step == st.n:
        st.tally[mask] += 1
        return
    for row in range(st.nrows):
        col = st.nxt[row]
        if col >= st.outer[row]:
            continue
        if row and col >= st.inner[row - 1] and st.nxt[row - 1] <= col:
            continue
        nmask = mask
        if step and row > prev_row:
            nmask = mask | (1 << (step - 1))
        st.nxt[row] = col + 1
        _descend(st, step + 1, row, nmask)
        st.nxt[row] = col


def descent_tally(inner, outer):
    """Tally standard fillings by descent-set bitmask; see _kernels_py."""
    cdef int nrows = len(outer)
    cdef int n = 0
    cdef int i
    cdef int c_inner[MAXROWS]
    cdef int c_outer[MAXROWS]
    cdef int c_nxt[MAXROWS]
    if nrows > MAXROWS:
        raise ValueError(f"too many rows for the compiled kernel: {nrows}")
    for i in range(nrows):
        c_inner[i] = inner[i]
        c_outer[i] = outer[i]
        c_nxt[i] = c_inner[i]
        n += c_outer[i] - c_inner[i]
    if n == 0:
        return {0: 1}
    if n > MAXBOXES:
        raise ValueError(f"shape too large for the compiled kernel: {n} boxes")
    cdef int size = 1 << (n - 1)
    cdef i64* tally = <i64*> PyMem_Malloc(<size_t>size * sizeof(i64))
    if tally == NULL:
        raise MemoryError()
    for i in range(size):
        tally[i] = 0
    cdef DescentState st
    st.nrows = nrows
    st.n = n
    st.inner = c_inner
    st.outer = c_outer
    st.nxt = c_nxt
    st.tally = tally
    try:
        _descend(&st, 0, -1, 0)
        out = {}
        for i in range(size):
            if tally[i]:
                out[i] = tally[i]
        return out
    finally:
        PyMem_Free(tally)


cdef struct LRState:
    int nrows
    int n
    int* inner
    int* outer
    int* row_of        # per position in reverse reading order
    int* col_of
    int* entry         # entry[row*stride + col]
    int* counts
    int stride


cdef _lrfill(LRState* st, int pos, dict tally):
    cdef int i, j, lo, hi, v, top
    if pos == st.n:
        top = st.nrows
        while st.counts[top] == 0:
            top -= 1
        key = tuple([st.counts[i] for i in range(1, top + 1)])
        if key in tally:
            tally[key] += 1
        else:
            tally[key] = 1
        return
    i = st.row_of[pos]
    j = st.col_of[pos]
    lo = 1
    if i and st.inner[i - 1] <= j < st.outer[i - 1]:
        lo = st.entry[(i - 1) * st.stride + j] + 1
    hi = i + 1
    if j + 1 < st.outer[i] and st.entry[i * st.stride + j + 1] < hi:
        hi = st.entry[i * st.stride + j + 1]
    for v in range(lo, hi + 1):
        if v > 1 and st.counts[v] >= st.counts[v - 1]:
            continue
        st.counts[v] += 1
        st.entry[i * st.stride + j] = v
        _lrfill(st, pos + 1, tally)
        st.counts[v] -= 1


def lr_tally(inner, outer):
    """Tally lattice semistandard fillings by content; see _kernels_py."""
    cdef int nrows = len(outer)
    cdef int i, j, pos
    cdef int c_inner[MAXROWS]
    cdef int c_outer[MAXROWS]
    cdef int counts[MAXROWS + 2]
    if nrows > MAXROWS:
        raise ValueError(f"too many rows for the compiled kernel: {nrows}")
    cdef int n = 0
    cdef int width = 0
    for i in range(nrows):
        c_inner[i] = inner[i]
        c_outer[i] = outer[i]
        n += c_outer[i] - c_inner[i]
        if c_outer[i] > width:
            width = c_outer[i]
    if n == 0:
        return {(): 1}
    for i in range(nrows + 2):
        counts[i] = 0
    cdef int* row_of = <int*> PyMem_Malloc(n * sizeof(int))
    cdef int* col_of = <int*> PyMem_Malloc(n * sizeof(int))
    cdef int* entry = <int*> PyMem_Malloc(nrows * width * sizeof(int))
    if row_of == NULL or col_of == NULL or entry == NULL:
        PyMem_Free(row_of); PyMem_Free(col_of); PyMem_Free(entry)
        raise MemoryError()
    pos = 0
    for i in range(nrows):
        for j in range(c_outer[i] - 1, c_inner[i] - 1, -1):
            row_of[pos] = i
            col_of[pos] = j
            pos += 1
    cdef LRState st
    st.nrows = nrows
    st.n = n
    st.inner = c_inner
    st.outer = c_outer
    st.row_of = row_of
    st.col_of = col_of
    st.entry = entry
    st.counts = counts
    st.stride = width
    tally = {}
    try:
        _lrfill(&st, 0, tally)
        return tally
    finally:
        PyMem_Free(row_of)
        PyMem_Free(col_of)
        PyMem_Free(entry)
