#!/usr/bin/env python3
"""Brute-force reference values for the C++ tests.

Everything here is computed straight from the definitions, with no shared code
with the library. Run with --write to refresh frozen.json, or with --check to
compare against it (ctest does the latter).
"""
import argparse
import itertools
import json
import sys
from collections import deque
from pathlib import Path

FROZEN = Path(__file__).with_name("frozen.json")


# Affine permutations as window tuples.
def apply(w, x):
    n = len(w)
    r = (x - 1) % n
    return w[r] + (x - 1 - r)


def affine_simple(w, i):
    n = len(w)
    out = list(w)
    if i == 0:
        first, last = w[0], w[n - 1]
        out[0] = last - n
        out[n - 1] = first + n
    else:
        out[i - 1], out[i] = w[i], w[i - 1]
    return tuple(out)


def inversion_count(w):
    n = len(w)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            # pairs (i, j + m n) with m >= 0 and (j, i + m n) with m >= 1
            total += sum(1 for m in range(0, 64) if w[i] > w[j] + m * n)
            total += sum(1 for m in range(1, 64) if w[j] > w[i] + m * n)
    return total


def lengths_by_level(n, max_len):
    start = tuple(range(1, n + 1))
    seen = {start: 0}
    q = deque([start])
    while q:
        w = q.popleft()
        if seen[w] == max_len:
            continue
        for i in range(n):
            v = affine_simple(w, i)
            if v not in seen:
                seen[v] = seen[w] + 1
                q.append(v)
    counts = [0] * (max_len + 1)
    for w, l in seen.items():
        assert inversion_count(w) == l
        counts[l] += 1
    return counts


def reduced_words(w):
    n = len(w)
    target = inversion_count(w)
    out = []

    def go(v, word):
        if len(word) == target:
            if v == w:
                out.append(tuple(word))
            return
        for i in range(n):
            u = affine_simple(v, i)
            if inversion_count(u) == len(word) + 1 and descends_to(w, u, target - len(word) - 1):
                go(u, word + [i])

    def descends_to(w, u, rest):
        # u <= w in right weak order iff l(u^-1 w) = l(w) - l(u)
        return inversion_count(compose(inverse(u), w)) == rest

    go(tuple(range(1, n + 1)), [])
    return sorted(out)


def inverse(w):
    n = len(w)
    out = [0] * n
    for i in range(1, n + 1):
        v = w[i - 1]
        r = (v - 1) % n
        out[r] = i - (v - 1 - r)
    return tuple(out)


def compose(a, b):
    return tuple(apply(a, apply(b, x)) for x in range(1, len(a) + 1))


def commutation_class_count(words, n):
    words = set(words)
    seen = set()
    classes = 0

    def far(a, b):
        d = (a - b) % n
        return d not in (0, 1, n - 1) if n > 2 else False

    for w in words:
        if w in seen:
            continue
        classes += 1
        stack = [w]
        seen.add(w)
        while stack:
            u = stack.pop()
            for j in range(len(u) - 1):
                if far(u[j], u[j + 1]):
                    v = u[:j] + (u[j + 1], u[j]) + u[j + 2:]
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
    return classes


def weak_interval_size(w):
    n = len(w)
    start = w
    seen = {start}
    q = deque([start])
    while q:
        v = q.popleft()
        for i in range(n):
            u = affine_simple(v, i)
            if inversion_count(u) < inversion_count(v) and u not in seen:
                seen.add(u)
                q.append(u)
    return len(seen)


# Higher Bruhat data for the longest element, where every k-set is an
# inversion and the permanent poset has no relations.
def w0_consistent_count(n, k):
    level = list(itertools.combinations(range(1, n + 1), k))
    index = {x: i for i, x in enumerate(level)}
    packets = []
    for x in itertools.combinations(range(1, n + 1), k + 1):
        # lex order: omit the last element first
        members = [index[x[:i] + x[i + 1:]] for i in reversed(range(k + 1))]
        packets.append(members)
    count = 0
    for mask in range(1 << len(level)):
        ok = True
        for p in packets:
            flags = [(mask >> m) & 1 for m in p]
            c = sum(flags)
            if flags[:c] == [1] * c or flags[len(flags) - c:] == [1] * c:
                continue
            ok = False
            break
        if ok:
            count += 1
    return count


def w0_admissible_count(n, k):
    level = list(itertools.combinations(range(1, n + 1), k))
    packets = [[x[:i] + x[i + 1:] for i in reversed(range(k + 1))]
               for x in itertools.combinations(range(1, n + 1), k + 1)]
    of = {x: [] for x in level}
    for p in packets:
        for pos, m in enumerate(p):
            of[m].append((p, pos))
    placed = {}
    count = 0

    def ok_to_place(x, t):
        for p, pos in of[x]:
            got = sorted((placed[m], i) for i, m in enumerate(p) if m in placed)
            seq = [i for _, i in got] + [pos]
            # must be a prefix of 0..k or of k..0
            if seq != list(range(len(seq))) and seq != list(range(k, k - len(seq), -1)):
                return False
        return True

    def go(t):
        nonlocal count
        if t == len(level):
            count += 1
            return
        for x in level:
            if x not in placed and ok_to_place(x, t):
                placed[x] = t
                go(t + 1)
                del placed[x]

    go(0)
    return count


def derive():
    out = {}
    out["affine_lengths_n3_L8"] = lengths_by_level(3, 8)
    out["affine_lengths_n4_L5"] = lengths_by_level(4, 5)
    out["affine_lengths_n5_L4"] = lengths_by_level(5, 4)
    words = {}
    for name, w in {"w0_4": (4, 3, 2, 1), "w0_5": (5, 4, 3, 2, 1), "fig1": (1, 7, 2, 0),
                    "affine_example": (-3, -2, 8, 7), "table_w": (6, 4, 5, 2, 3, 1)}.items():
        ws = reduced_words(w)
        words[name] = {"window": list(w), "words": len(ws), "classes": commutation_class_count(ws, len(w))}
    out["reduced_words"] = words
    out["weak_interval"] = {str(list(w)): weak_interval_size(w)
                            for w in [(6, 4, 5, 2, 3, 1), (4, 2, 3, 1), (1, 7, 2, 0), (-3, -2, 8, 7), (2, 0, 4)]}
    out["w0_consistent"] = {f"{n},{k}": w0_consistent_count(n, k)
                            for n, k in [(4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 4), (6, 5)]}
    out["w0_admissible"] = {f"{n},{k}": w0_admissible_count(n, k)
                            for n, k in [(4, 1), (4, 2), (5, 2), (5, 3), (6, 4)]}
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    values = derive()
    if args.write:
        FROZEN.write_text(json.dumps(values, indent=1, sort_keys=True) + "\n")
    if args.check:
        frozen = json.loads(FROZEN.read_text())
        if frozen != values:
            print("oracle values drifted from frozen.json", file=sys.stderr)
            return 1
        print("oracle values match frozen.json")
    if not args.write and not args.check:
        print(json.dumps(values, indent=1, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
