"""Generate-and-filter oracles for small sizes.

Each oracle builds every candidate of the right shape by brute force and
keeps those satisfying the defining conditions, re-derived here from scratch.
None of them calls a package enumerator or membership predicate.
"""

from itertools import combinations, permutations, product


def _is_path(s):
    h = 0
    for c in s:
        h += {"U": 1, "D": -1, "H": 0}[c]
        if h < 0:
            return False
    return h == 0


def _strings(letters, length):
    return ("".join(t) for t in product(letters, repeat=length))


def _schroder_strings(semilength):
    # U, D take one unit and H two; a path of semilength m has 2m units
    out = []
    for hs in range(semilength + 1):
        ups = semilength - hs
        for s in _strings("UDH", 2 * ups + hs):
            if s.count("H") == hs and s.count("U") == ups and _is_path(s):
                out.append(s)
    return out


def _match(s, i):
    h = 0
    for j in range(i, len(s)):
        h += {"U": 1, "D": -1, "H": 0}[s[j]]
        if h == 0 and s[j] == "D":
            return j
    raise AssertionError


def _descent_lengths(s):
    runs, cur = [], 0
    for c in s + "X":
        if c == "D":
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    return runs


def _ascent_lengths(s):
    return _descent_lengths(s.translate(str.maketrans("UD", "DU")))


def _comps(total, parts):
    return [c for c in product(range(total + 1), repeat=parts) if sum(c) == total]


def schroder(d, n, k):
    m = (n - k) * (d - 1) + k + 1
    out = []
    for s in _schroder_strings(m):
        if s.count("U") != k or (s.count("H") - 1) % (d - 1):
            continue
        if all((s[i:_match(s, i)].count("H") - 1) % (d - 1) == 0 and "H" in s[i:_match(s, i)]
               for i, c in enumerate(s) if c == "U"):
            out.append(s)
    return sorted(out)


def dyck_strings(m):
    return [s for s in _strings("UD", 2 * m) if _is_path(s)]


def dyck(d, m, peaks):
    return sorted(s for s in dyck_strings(m)
                  if s.count("UD") == peaks and all((a - 1) % (d - 1) == 0 for a in _ascent_lengths(s)))


def labeled_schroder(d, n, k):
    out = set()
    for s in _schroder_strings(n) if n else [""]:
        runs = _descent_lengths(s)
        if any(r > d - 1 for r in runs):
            continue
        if s.count("H") + sum(1 for a, b in zip(s, s[1:]) if a == b == "D") != k:
            continue
        for labs in product(*[list(combinations(range(1, d - 1), r - 1)) for r in runs]):
            out.add((s, labs))
    return out


def labeled_dyck(d, n, k):
    out = set()
    for s in dyck_strings(n + 1):
        if sum(1 for a, b in zip(s, s[1:]) if a == b == "U") != k:
            continue
        runs = _descent_lengths(s)
        for labs in product(*[_comps(r - 1, d - 1) for r in runs[:-1]]):
            out.add((s, labs + (None,)))
    return out


def _tree_words(edges):
    out = []
    for seq in product(range(edges + 1), repeat=edges + 1):
        if sum(seq) != edges:
            continue
        slots = 1
        ok = True
        for i, j in enumerate(seq):
            slots += j - 1
            if slots == 0 and i < edges:
                ok = False
                break
        if ok and slots == 0:
            out.append(seq)
    return out


def trees(d, edges, internal):
    return sorted(t for t in _tree_words(edges)
                  if sum(1 for j in t if j) == internal
                  and all(j == 0 or (j - 1) % (d - 1) == 0 for j in t))


def labeled_trees(d, edges, leaves):
    out = set()
    for t in _tree_words(edges):
        if t[0] == 0 or t.count(0) != leaves:
            continue
        for labs in product(*[_comps(j - 1, d - 1) for j in t[1:] if j]):
            out.add((t, labs))
    return out


def contains_231(w):
    return any(w[k] < w[i] < w[j] for i, j, k in combinations(range(len(w)), 3))


def decreasing_run_lengths(w):
    runs = [1]
    for a, b in zip(w, w[1:]):
        if a > b:
            runs[-1] += 1
        else:
            runs.append(1)
    return runs


def perms(d, size, runs):
    return sorted(w for w in permutations(range(1, size + 1))
                  if not contains_231(w)
                  and len(decreasing_run_lengths(w)) == runs
                  and all((r - 1) % (d - 1) == 0 for r in decreasing_run_lengths(w)))


def fpaths(d, n, k):
    out = set()
    for runs in product(range(n + 1), repeat=n):
        if runs.count(0) != k:
            continue
        if any(sum(runs[:i]) > i for i in range(1, n + 1)):
            continue
        choices = [[None] if r == 0 else _comps(r - 1, d - 1) for r in runs]
        for labs in product(*choices):
            out.add(tuple(zip(runs, labs)))
    return out


def monomial_texts(d, n, k):
    """Printed forms of every monomial with n operations, k of them L.

    Candidates are all token strings over L( , a , ) with the right token
    counts; a string is kept if it is balanced, has no empty L(), and every
    bracketed or top-level factor list has length 1 mod d-1.
    """
    leaves = (n - k) * (d - 1) + 1
    out = []
    for toks in set(permutations("U" * k + "D" * k + "a" * leaves)):
        stack = [0]
        ok = True
        for t in toks:
            if t == "U":
                stack[-1] += 1
                stack.append(0)
            elif t == "a":
                stack[-1] += 1
            else:
                if len(stack) == 1:
                    ok = False
                    break
                inner = stack.pop()
                if inner == 0 or (inner - 1) % (d - 1):
                    ok = False
                    break
        if not ok or len(stack) != 1 or (stack[0] - 1) % (d - 1):
            continue
        text, i = [], 0
        for t in toks:
            if t == "U":
                text.append("L(")
            elif t == "D":
                text.append(")")
            else:
                i += 1
                text.append(f"a{i}")
        out.append("".join(text))
    return sorted(out)
