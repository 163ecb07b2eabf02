"""Kazhdan-Lusztig polynomials over any Coxeter context.

The engine works column by column: for a fixed w it computes P_{x,w} for
every x <= w at once, memoized per context.  With s the chosen left descent
of w and v = s w,

    P_{x,w} = P_{sx,w}                                   when s x > x,
    P_{x,w} = P_{sx,v} + q P_{x,v}
              - sum mu(z, v) q^{(l(w)-l(z))/2} P_{x,z}   when s x < x,

where the sum runs over x <= z <= v with s z < z, and mu(z, v) is the
coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}.  Because the context may be
a parabolic subgroup, the same engine computes the subgroup polynomials P'
using the subgroup's own length and Bruhat order.

R-polynomials and the inversion identity

    q^{l(w)-l(x)} P_{x,w}(1/q) = sum_{x <= z <= w} R_{x,z} P_{z,w}

are implemented as an independent cross-check of the recursion.
"""

from .errors import CacheError
from .polynomials import IntPolynomial, ONE, ZERO

_Q_MINUS_ONE = IntPolynomial((-1, 1))


class KLEngine:
    """Memoized Kazhdan-Lusztig computations for one Coxeter context."""

    def __init__(self, ctx, descent_rule="lowest"):
        if descent_rule not in ("lowest", "highest"):
            raise ValueError(f"unknown descent rule {descent_rule!r}")
        self.ctx = ctx
        self.descent_rule = descent_rule
        self._columns = {}
        self._rpolys = {}

    def _choose_descent(self, w):
        ds = self.ctx.left_descents(w)
        return ds[0] if self.descent_rule == "lowest" else ds[-1]

    def column(self, w):
        """dict mapping each x <= w to P_{x,w}."""
        col = self._columns.get(w)
        if col is not None:
            return col
        ctx = self.ctx
        if w == ctx.identity:
            col = {w: ONE}
            self._columns[w] = col
            return col
        i = self._choose_descent(w)
        v = ctx.left_mul(i, w)
        colv = self.column(v)
        lw = ctx.length(w)
        lv = lw - 1

        mulist = []
        for z, p in colv.items():
            if not ctx.left_descent(z, i):
                continue
            diff = lv - ctx.length(z)
            if diff % 2 == 0:
                continue
            m = p[(diff - 1) // 2]
            if m:
                mulist.append((z, m, lv - diff))

        col = {}
        for x in reversed(ctx.lower_interval(w)):
            lx = ctx.length(x)
            sx = ctx.left_mul(i, x)
            if not ctx.left_descent(x, i):
                # l(sx) = l(x) + 1 and sx <= w by lifting, so it is done
                col[x] = col[sx]
                continue
            p = colv[sx] + colv.get(x, ZERO).shifted(1)
            for z, m, lz in mulist:
                if lz < lx:
                    continue
                if z is x or z == x:
                    p = p - IntPolynomial((m,)).shifted((lw - lz) // 2)
                elif lz > lx and ctx.bruhat_leq(x, z):
                    p = p - (m * self.polynomial(x, z)).shifted(
                        (lw - lz) // 2)
            if __debug__ and x != w:
                assert p[0] == 1 and all(c >= 0 for c in p.coeffs), \
                    "KL invariant violated"
                assert 2 * p.degree <= lw - lx - 1, "KL degree bound violated"
            col[x] = p
        self._columns[w] = col
        return col

    def polynomial(self, x, w):
        """P_{x,w}; the zero polynomial when x is not below w."""
        ctx = self.ctx
        if x is w or x == w:
            return ONE
        col = self._columns.get(w)
        if col is not None:
            return col.get(x, ZERO)
        if not ctx.bruhat_leq(x, w):
            return ZERO
        return self.column(w).get(x, ZERO)

    def mu(self, x, w):
        """Top-degree coefficient mu(x, w).

        Requires x < w is not violated from above: x == w or x > w raise.
        Incomparable pairs return 0, matching P_{x,w} = 0.
        """
        ctx = self.ctx
        if x == w or ctx.bruhat_leq(w, x):
            raise ValueError("mu(x, w) needs x < w")
        diff = ctx.length(w) - ctx.length(x)
        if diff % 2 == 0:
            return 0
        return self.polynomial(x, w)[(diff - 1) // 2]

    def table(self, w):
        """All pairs of the column of w, ordered by (length, word) of x."""
        col = self.column(w)
        ctx = self.ctx
        return {x: col[x] for x in sorted(col, key=ctx.sort_key)}

    def r_polynomial(self, x, w):
        """R_{x,w} by the descent recursion; independent of the P engine."""
        ctx = self.ctx
        if x is w or x == w:
            return ONE
        if not ctx.bruhat_leq(x, w):
            return ZERO
        key = (x, w)
        memo = self._rpolys
        hit = memo.get(key)
        if hit is not None:
            return hit
        i = ctx.first_left_descent(w)
        v = ctx.left_mul(i, w)
        sx = ctx.left_mul(i, x)
        if ctx.left_descent(x, i):
            res = self.r_polynomial(sx, v)
        else:
            res = _Q_MINUS_ONE * self.r_polynomial(x, v) \
                + self.r_polynomial(sx, v).shifted(1)
        memo[key] = res
        return res

    def inversion_identity_holds(self, x, w):
        """Check q^{l(w)-l(x)} P_{x,w}(1/q) == sum R_{x,z} P_{z,w}."""
        ctx = self.ctx
        if not ctx.bruhat_leq(x, w):
            return True  # both sides are zero
        col = self.column(w)
        rhs = ZERO
        for z in col:
            if ctx.bruhat_leq(x, z):
                rhs = rhs + self.r_polynomial(x, z) * col[z]
        n = ctx.length(w) - ctx.length(x)
        lhs = self.polynomial(x, w).reversed_to(n)
        return lhs == rhs


def get_engine(ctx, descent_rule="lowest"):
    """The shared engine of a context (one per descent rule)."""
    store = getattr(ctx, "_kl_engines", None)
    if store is None:
        store = ctx._kl_engines = {}
    eng = store.get(descent_rule)
    if eng is None:
        eng = store[descent_rule] = KLEngine(ctx, descent_rule)
    return eng


class KLCache:
    """Append-only persistent store of computed P_{x,w} coefficients.

    Line format, with elements in whitespace-free token form:

        A 3 2,1,4,3 4,2,3,1 : 1,1

    One file may serve several groups at once (the product factorizations
    drop into smaller symmetric groups, for instance); lines are bucketed
    by their (family, rank) tag when the file is read and parsed the first
    time the matching system asks for an entry.  Parsed lines are
    validated before use: constant term 1, nonnegative coefficients, and
    degree within the KL bound.  Nothing is ever trusted blindly.
    """

    def __init__(self, path=None):
        self.path = path
        self.entries = {}
        self.hits = 0
        self.misses = 0
        self._lines = []    # file content in order, stored verbatim
        self._pending = {}  # (family, rank) -> [(lineno, x, w, coeffs)]
        self._read = False

    def _read_file(self):
        if self._read:
            return
        self._read = True
        if self.path is None:
            return
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except FileNotFoundError:
            return
        for lineno, line in enumerate(lines, 1):
            self._lines.append(line)
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 6 or parts[4] != ":":
                raise CacheError(f"{self.path}:{lineno}: malformed line")
            lfam, lrank, xtext, wtext, _, coeffs = parts
            try:
                lrank = int(lrank)
            except ValueError:
                raise CacheError(
                    f"{self.path}:{lineno}: bad rank {parts[1]!r}") from None
            self._pending.setdefault((lfam, lrank), []).append(
                (lineno, xtext, wtext, coeffs))

    def load(self, system):
        """Read the file and validate the lines matching the given system."""
        self._read_file()
        fam = system.datum.family
        rank = system.datum.rank
        for lineno, xtext, wtext, coeffs in self._pending.pop(
                (fam, rank), ()):
            try:
                x = system.parse_element(xtext)
                w = system.parse_element(wtext)
                poly = IntPolynomial.from_coeff_string(coeffs)
            except ValueError as exc:
                raise CacheError(f"{self.path}:{lineno}: {exc}") from None
            self._validate(system, x, w, poly, lineno)
            self.entries[(fam, rank, x, w)] = poly
        return self

    def _validate(self, system, x, w, poly, lineno=None):
        where = f"{self.path}:{lineno}: " if lineno is not None else ""
        if x == w:
            if poly != ONE:
                raise CacheError(f"{where}P_(x,x) must be 1")
            return
        ldiff = system.length(w) - system.length(x)
        if poly:
            if poly[0] != 1:
                raise CacheError(f"{where}constant term must be 1")
            if any(c < 0 for c in poly.coeffs):
                raise CacheError(f"{where}negative coefficient")
            if ldiff <= 0 or 2 * poly.degree > ldiff - 1:
                raise CacheError(f"{where}degree violates the KL bound")

    def get(self, system, x, w):
        self._read_file()
        fam, rank = system.datum.family, system.datum.rank
        if (fam, rank) in self._pending:
            self.load(system)
        hit = self.entries.get((fam, rank, x, w))
        if hit is None:
            self.misses += 1
        else:
            self.hits += 1
        return hit

    def put(self, system, x, w, poly):
        """Record a computed pair and append it to the file."""
        self._read_file()
        fam, rank = system.datum.family, system.datum.rank
        if (fam, rank) in self._pending:
            self.load(system)
        key = (fam, rank, x, w)
        if key in self.entries:
            return
        self._validate(system, x, w, poly)
        self.entries[key] = poly
        line = self._render(system, x, w, poly)
        self._lines.append(line)
        if self.path is not None:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def _render(self, system, x, w, poly):
        return (f"{system.datum.family} {system.datum.rank} "
                f"{system.format_element(x, 'token')} "
                f"{system.format_element(w, 'token')} : "
                f"{poly.coeff_string()}")

    def dump_lines(self):
        """All lines in load/insert order; matches the file byte for byte."""
        self._read_file()
        return list(self._lines)

    def save(self, path=None):
        self._read_file()
        path = path or self.path
        with open(path, "w", encoding="utf-8") as fh:
            for line in self._lines:
                fh.write(line + "\n")


def kl_polynomial(ctx, x, w, cache=None, descent_rule="lowest"):
    """P_{x,w} in the given context, consulting a KLCache when provided.

    The persistent cache stores ambient-system pairs only; for parabolic
    contexts (whose polynomials differ from the ambient ones) it is ignored.
    """
    use_cache = cache is not None and ctx is ctx.system
    if use_cache:
        hit = cache.get(ctx, x, w)
        if hit is not None:
            return hit
    poly = get_engine(ctx, descent_rule).polynomial(x, w)
    if use_cache and ctx.bruhat_leq(x, w):
        cache.put(ctx, x, w, poly)
    return poly


def mu(ctx, x, w):
    return get_engine(ctx).mu(x, w)


def r_polynomial(ctx, x, w):
    return get_engine(ctx).r_polynomial(x, w)


def verify_inversion_identity(ctx, x, w):
    return get_engine(ctx).inversion_identity_holds(x, w)


def kl_table(ctx, w):
    return get_engine(ctx).table(w)
