"""Pure-Python enumeration kernel; the fallback when ``_ckernel`` is not built.

Smooth words are walked depth-first through the tree of right extensions.
Each node keeps a *derivative tower*: level 0 is the word, level i+1 is the
derivative of level i. Appending one letter changes a level's derivative by
at most one appended letter, so an extension costs a short cascade up the
tower instead of a full re-differentiation.

Rules for appending letter x to a level whose last run has length l
(alphabet {a, b}, a < b; boundary runs are kept iff their length is b,
interior runs must have length a or b):

* x continues the last run: fail if l + 1 > b; the next level gains a ``b``
  when l + 1 == b, otherwise it is unchanged.
* x opens a new run: if the old last run is not also the first run it turns
  interior; fail unless l in {a, b}; the next level gains an ``a`` when
  l == a (a run of length b was already kept).
"""

from __future__ import annotations


class _Tower:
    __slots__ = ("a", "b", "letters", "runlen", "nruns")

    def __init__(self, a: int, b: int):
        self.a = a
        self.b = b
        self.letters: list[list[int]] = []
        self.runlen: list[list[int]] = []
        self.nruns: list[list[int]] = []

    def push(self, x: int) -> int:
        """Append ``x`` to level 0; return levels touched, or 0 if not smooth."""
        a, b = self.a, self.b
        letters, runlen, nruns = self.letters, self.runlen, self.nruns
        lv = 0
        while True:
            if lv == len(letters):
                letters.append([])
                runlen.append([])
                nruns.append([])
            row = letters[lv]
            if not row:
                row.append(x)
                runlen[lv].append(1)
                nruns[lv].append(1)
                return lv + 1
            l = runlen[lv][-1]
            nr = nruns[lv][-1]
            carry = 0
            if x == row[-1]:
                if l == b:
                    break
                if l + 1 == b:
                    carry = b
                runlen[lv].append(l + 1)
                nruns[lv].append(nr)
            else:
                if nr >= 2:
                    if l != a and l != b:
                        break
                    if l == a:
                        carry = a
                runlen[lv].append(1)
                nruns[lv].append(nr + 1)
            row.append(x)
            lv += 1
            if not carry:
                return lv
            x = carry
        self.pop(lv)
        return 0

    def pop(self, depth: int) -> None:
        for i in range(depth):
            self.letters[i].pop()
            self.runlen[i].pop()
            self.nruns[i].pop()

    def height(self) -> int:
        h = 0
        for row in self.letters:
            if not row:
                break
            h += 1
        return h


def word_height(word: str, a: int = 1, b: int = 2) -> int:
    """Height via the tower, or -1 if ``word`` is not smooth."""
    t = _Tower(a, b)
    for ch in word:
        if not t.push(int(ch)):
            return -1
    return t.height()


def walk(n_max: int, a: int = 1, b: int = 2, collect: int = -1):
    """Per-length statistics of smooth words up to length ``n_max``.

    Returns ``(count, hmin, hmax, bmin, bmax, dead, words)`` where the first
    six are lists indexed by length: number of smooth words, min/max height,
    min/max number of occurrences of letter ``b``, and how many words have no
    smooth right extension (only meaningful below ``n_max``). ``words`` holds
    the words of length ``collect`` in lexicographic order.
    """
    size = n_max + 1
    count = [0] * size
    hmin = [1 << 30] * size
    hmax = [-1] * size
    bmin = [1 << 30] * size
    bmax = [-1] * size
    dead = [0] * size
    words: list[str] = []

    count[0] = 1
    hmin[0] = hmax[0] = bmin[0] = bmax[0] = 0
    if collect == 0:
        words.append("")

    tower = _Tower(a, b)
    path: list[int] = []
    cascade = [0] * size
    choice = [0] * (size + 1)
    kids = [0] * (size + 1)
    nb = 0
    depth = 0
    while True:
        if depth == n_max or choice[depth] == 2:
            if depth < n_max and kids[depth] == 0:
                dead[depth] += 1
            if depth == 0:
                break
            depth -= 1
            tower.pop(cascade[depth])
            if path.pop() == b:
                nb -= 1
            continue
        x = a if choice[depth] == 0 else b
        choice[depth] += 1
        c = tower.push(x)
        if not c:
            continue
        kids[depth] += 1
        cascade[depth] = c
        path.append(x)
        if x == b:
            nb += 1
        depth += 1
        choice[depth] = 0
        kids[depth] = 0

        count[depth] += 1
        h = tower.height()
        if h < hmin[depth]:
            hmin[depth] = h
        if h > hmax[depth]:
            hmax[depth] = h
        if nb < bmin[depth]:
            bmin[depth] = nb
        if nb > bmax[depth]:
            bmax[depth] = nb
        if depth == collect:
            words.append("".join(map(str, path)))
    return count, hmin, hmax, bmin, bmax, dead, words


def kolakoski(n: int) -> str:
    """First ``n`` letters of the Kolakoski sequence 1221121221221..."""
    if n <= 0:
        return ""
    seq = [1, 2, 2]
    i = 2
    while len(seq) < n:
        nxt = 3 - seq[-1]
        seq.extend([nxt] * seq[i])
        i += 1
    return "".join(map(str, seq[:n]))
