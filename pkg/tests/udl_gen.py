"""Random UDL programs with independently tracked dimensions.

Dimensions here are plain (length, mass, time) tuples computed alongside the
generated text, so they can serve as an oracle for the checker.
"""

import random

from conftest import DERIVED

BASE = {"m": (1, 0, 0), "kg": (0, 1, 0), "s": (0, 0, 1)}
NAMES = {**BASE, "g": (0, 1, 0), "cm": (1, 0, 0), "J": (2, 1, -2), "c": (1, 0, -1)}


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def scale(a, k):
    return tuple(x * k for x in a)


def unit_for(d):
    """A unit expression with dimension ``d`` built from m, kg and s."""
    parts = [f"{sym}^{e}" for sym, e in zip(("m", "kg", "s"), d) if e]
    return "*".join(parts) if parts else "1"


class Gen:
    def __init__(self, seed, max_exp=2):
        self.rng = random.Random(seed)
        self.max_exp = max_exp
        self.vars = {}

    def literal(self):
        r = self.rng
        return repr(round(r.uniform(0.1, 50.0), r.randint(0, 6)))

    def leaf(self):
        r = self.rng
        choice = r.random()
        if choice < 0.3:
            return self.literal(), (0, 0, 0)
        pool = dict(NAMES)
        pool.update(self.vars)
        name = r.choice(sorted(pool))
        return name, pool[name]

    def small(self, d):
        return all(abs(e) <= self.max_exp for e in d)

    def expr(self, depth):
        r = self.rng
        if depth <= 0 or r.random() < 0.25:
            return self.leaf()
        kind = r.choice(["mul", "div", "add", "sub", "neg", "pow", "sqrt", "frac"])
        a, da = self.expr(depth - 1)
        if kind in ("mul", "div"):
            b, db = self.expr(depth - 1)
            d = add(da, db) if kind == "mul" else add(da, scale(db, -1))
            if not self.small(d):
                return a, da
            return f"({a} {'*' if kind == 'mul' else '/'} {b})", d
        if kind in ("add", "sub"):
            other = f"({self.literal()}*{unit_for(da)})"
            return f"({a} {'+' if kind == 'add' else '-'} {other})", da
        if kind == "neg":
            return f"(-{a})", da
        if kind == "pow":
            n = r.choice([-2, -1, 0, 2, 3])
            d = scale(da, n)
            if not self.small(d):
                return a, da
            return f"({a})^{n}", d
        if kind == "sqrt":
            return f"sqrt(({a})*({a}))", da
        q = r.choice([2, 3, 4, 5])
        p = r.choice([-1, 1, 2])
        d = scale(da, p)
        if not self.small(d):
            return a, da
        return f"pow(({a})^{q}, {p}, {q})", d

    def program(self, statements=6, depth=4):
        r = self.rng
        lines = [DERIVED.rstrip("\n")]
        for i in range(statements):
            text, d = self.expr(depth)
            if r.random() < 0.6:
                name = f"v{i}"
                suffix = r.choice(["", "", " @single", " @double"])
                lines.append(f"let {name}: {unit_for(d)}{suffix} = {text};")
                self.vars[name] = d
            else:
                lines.append(f"print {text} in {unit_for(d)};")
        for name, d in self.vars.items():
            lines.append(f"print {name} in {unit_for(d)};")
        return "\n".join(lines) + "\n"


def corpus(n, seed=0, **kw):
    return [Gen(seed * 100003 + i).program(**kw) for i in range(n)]
