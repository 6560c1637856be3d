"""Reference implementations of the enumeration kernels.

Both kernels take a shape as parallel tuples (inner, outer) of per-row column
bounds: row i occupies columns inner[i] <= j < outer[i].  They are the hot
loops of every exhaustive sweep; skewsupport._kernels is a compiled twin with
the same contract.
"""

BACKEND = "python"


def descent_tally(inner, outer):
    """Tally standard fillings by descent set.

    A standard filling places 1..n, rows increasing left to right and columns
    increasing top to bottom; position i is a descent when i+1 sits in a lower
    row.  Returns {bitmask: count} with bit i-1 for a descent at i.
    """
    nrows = len(outer)
    n = sum(outer) - sum(inner)
    if n == 0:
        return {0: 1}
    tally: dict[int, int] = {}
    nxt = list(inner)  # next unfilled column in each row

    def place(step, prev_row, mask):
        if step == n:
            tally[mask] = tally.get(mask, 0) + 1
            return
        bit = 1 << (step - 1) if step else 0
        for row in range(nrows):
            col = nxt[row]
            if col >= outer[row]:
                continue
            if row and col >= inner[row - 1] and nxt[row - 1] <= col:
                continue  # the box above exists and is still unfilled
            nxt[row] = col + 1
            place(step + 1, row, mask | bit if step and row > prev_row else mask)
            nxt[row] = col

    place(0, -1, 0)
    return tally


def lr_tally(inner, outer):
    """Tally lattice semistandard fillings by content.

    Fillings are weakly increasing along rows, strictly increasing down
    columns, and their reverse reading word (rows top to bottom, right to
    left) has every prefix containing at least as many v-1 as v.  The result
    {content: count} gives the Schur expansion of the shape.
    """
    nrows = len(outer)
    n = sum(outer) - sum(inner)
    if n == 0:
        return {(): 1}
    cells = [
        (i, j)
        for i in range(nrows)
        for j in range(outer[i] - 1, inner[i] - 1, -1)
    ]
    entries = {}
    counts = [0] * (nrows + 2)
    tally: dict[tuple[int, ...], int] = {}

    def fill(pos):
        if pos == n:
            top = nrows
            while counts[top] == 0:
                top -= 1
            key = tuple(counts[1 : top + 1])
            tally[key] = tally.get(key, 0) + 1
            return
        i, j = cells[pos]
        lo = 1
        if i and inner[i - 1] <= j < outer[i - 1]:
            lo = entries[i - 1, j] + 1  # strictly below the box above
        hi = i + 1  # a lattice word never exceeds the row index
        if j + 1 < outer[i]:
            hi = min(hi, entries[i, j + 1])
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # would break the prefix condition
            counts[v] += 1
            entries[i, j] = v
            fill(pos + 1)
            counts[v] -= 1

    fill(0)
    return tally
