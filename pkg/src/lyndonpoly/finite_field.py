"""Arithmetic in F_p and F_p^n = F_p[beta]/(f), normal bases, minimal polynomials.

Polynomials are tuples of ints in [0, p), lowest degree first, with no
trailing zeros; the zero polynomial is ``()``. Extension field elements are
tuples of exactly n coordinates in the basis 1, beta, ..., beta^(n-1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .words import ContractError, Word

Poly = tuple
Elem = tuple


class DegreeCollapse(ArithmeticError):
    """The conjugates of an element are not pairwise distinct."""


class ConsistencyError(RuntimeError):
    """A computed value that must lie in the base field does not."""


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a: Poly) -> int:
    return len(a) - 1


def format_poly(a: Poly) -> str:
    """Comma-separated coefficients, lowest degree first (``1,1,0,0,1,1,1``)."""
    return ','.join(map(str, a)) if a else '0'


def parse_poly(text: str) -> Poly:
    return trim(int(tok) for tok in text.split(','))


def poly_to_str(a: Poly, var: str = 'x') -> str:
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        mono = '' if k == 0 else var if k == 1 else f'{var}^{k}'
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f'{c}{mono}')
    return '+'.join(terms) or '0'


class PrimeField:
    """F_p together with schoolbook arithmetic on polynomials over it."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ContractError(f'{p!r} is not a prime')
        self.p = p

    def __repr__(self):
        return f'PrimeField({self.p})'

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError('zero has no inverse in F_p')
        return pow(a, -1, self.p)

    def poly(self, coeffs: Sequence[int]) -> Poly:
        return trim(c % self.p for c in coeffs)

    def add(self, a: Poly, b: Poly) -> Poly:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return trim(out)

    def neg(self, a: Poly) -> Poly:
        return tuple(-c % self.p for c in a)

    def sub(self, a: Poly, b: Poly) -> Poly:
        return self.add(a, self.neg(b))

    def scale(self, a: Poly, c: int) -> Poly:
        return self.poly(c * x for x in a)

    def mul(self, a: Poly, b: Poly) -> Poly:
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self.poly(out)

    def divmod(self, a: Poly, b: Poly) -> Tuple[Poly, Poly]:
        if not b:
            raise ZeroDivisionError('polynomial division by zero')
        p = self.p
        rem = list(a)
        db = len(b) - 1
        lead_inv = self.inv(b[-1])
        quot = [0] * max(len(a) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * lead_inv % p
            if c:
                quot[k - db] = c
                for j in range(db + 1):
                    rem[k - db + j] = (rem[k - db + j] - c * b[j]) % p
        return trim(quot), trim(rem[:db])

    def mod(self, a: Poly, b: Poly) -> Poly:
        return self.divmod(a, b)[1]

    def monic(self, a: Poly) -> Poly:
        if not a:
            return a
        return self.scale(a, self.inv(a[-1]))

    def gcd(self, a: Poly, b: Poly) -> Poly:
        """Monic greatest common divisor."""
        while b:
            a, b = b, self.mod(a, b)
        return self.monic(a)

    def powmod(self, a: Poly, e: int, f: Poly) -> Poly:
        if e < 0:
            raise ContractError('negative exponent')
        result: Poly = self.mod((1,), f)
        base = self.mod(a, f)
        while e:
            if e & 1:
                result = self.mod(self.mul(result, base), f)
            e >>= 1
            if e:
                base = self.mod(self.mul(base, base), f)
        return result

    def evaluate(self, a: Poly, x: int) -> int:
        acc = 0
        for c in reversed(a):
            acc = (acc * x + c) % self.p
        return acc


def _require_monic(f: Poly, field: PrimeField):
    if not f or f[-1] != 1:
        raise ContractError(f'polynomial {format_poly(f)} is not monic')
    if any(not 0 <= c < field.p for c in f):
        raise ContractError(f'coefficients of {format_poly(f)} not reduced mod {field.p}')


def is_irreducible(f: Poly, field: PrimeField) -> bool:
    """Rabin's test for a monic f of degree n >= 1.

    f is irreducible iff x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1
    for every prime r dividing n.
    """
    _require_monic(f, field)
    n = degree(f)
    if n < 1:
        raise ContractError('constant polynomials are neither irreducible nor reducible')
    if n == 1:
        return True
    x = (0, 1)
    frob = {0: field.mod(x, f)}
    cur = frob[0]
    for k in range(1, n + 1):
        cur = field.powmod(cur, field.p, f)
        frob[k] = cur
    if frob[n] != field.mod(x, f):
        return False
    for r in prime_factors(n):
        if degree(field.gcd(field.sub(frob[n // r], x), f)) != 0:
            return False
    return True


def find_irreducible(n: int, field: PrimeField, rng, max_tries: Optional[int] = None) -> Poly:
    """Sample monic degree-n polynomials from `rng` until one is irreducible."""
    if n < 1:
        raise ContractError(f'degree must be >= 1, got {n}')
    for _ in range(max_tries or 100 * n + 100):
        f = tuple(rng.randrange(field.p) for _ in range(n)) + (1,)
        if is_irreducible(f, field):
            return f
    raise RuntimeError(f'no irreducible polynomial of degree {n} found; is the rng stuck?')


def monic_irreducibles(n: int, field: PrimeField) -> set:
    """Every monic irreducible of degree n, by testing all p^n candidates."""
    from itertools import product

    return {
        f + (1,)
        for f in (tuple(c) for c in product(range(field.p), repeat=n))
        if is_irreducible(f + (1,), field)
    }


class ExtensionField:
    """F_p[beta]/(f) for a monic irreducible f of degree n.

    ``ops`` counts extension multiplications (``'mul'``) so callers can
    confirm which code paths stay free of them.
    """

    def __init__(self, base: PrimeField, modulus: Sequence[int], check: bool = True):
        modulus = base.poly(modulus)
        _require_monic(modulus, base)
        if check and not is_irreducible(modulus, base):
            raise ContractError(f'{poly_to_str(modulus)} is reducible over F_{base.p}')
        self.base = base
        self.p = base.p
        self.modulus = modulus
        self.n = degree(modulus)
        self.ops: Counter = Counter()

    def __repr__(self):
        return f'ExtensionField(F_{self.p}[b]/({poly_to_str(self.modulus, "b")}))'

    @property
    def zero(self) -> Elem:
        return (0,) * self.n

    @property
    def one(self) -> Elem:
        return (1,) + (0,) * (self.n - 1)

    def element(self, coeffs: Sequence[int]) -> Elem:
        """Reduce an arbitrary polynomial in beta to an element."""
        r = self.base.mod(self.base.poly(coeffs), self.modulus)
        return r + (0,) * (self.n - len(r))

    def embed(self, c: int) -> Elem:
        return ((c % self.p),) + (0,) * (self.n - 1)

    def add(self, a: Elem, b: Elem) -> Elem:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: Elem, b: Elem) -> Elem:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        return tuple(-x % self.p for x in a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        self.ops['mul'] += 1
        n, p, f = self.n, self.p, self.modulus
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(n):
                    prod[k - n + j] -= c * f[j]
        return tuple(c % p for c in prod[:n])

    def pow(self, a: Elem, e: int) -> Elem:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a: Elem) -> Elem:
        """Inverse by the extended Euclidean algorithm over F_p[x]."""
        F = self.base
        r0, r1 = self.modulus, trim(a)
        if not r1:
            raise ZeroDivisionError('zero has no inverse')
        s0, s1 = (), (1,)
        while r1:
            quot, rem = F.divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, F.sub(s0, F.mul(quot, s1))
        # r0 is a nonzero constant since the modulus is irreducible
        return self.element(F.scale(s0, F.inv(r0[0])))

    def frobenius(self, a: Elem) -> Elem:
        """a -> a^p."""
        return self.pow(a, self.p)

    def conjugates(self, a: Elem) -> list:
        """a, a^p, ..., a^(p^(n-1))."""
        out = [a]
        for _ in range(self.n - 1):
            out.append(self.frobenius(out[-1]))
        return out

    def evaluate(self, g: Poly, x: Elem) -> Elem:
        """g(x) for g with coefficients in F_p."""
        acc = self.zero
        for c in reversed(g):
            acc = self.add(self.mul(acc, x), self.embed(c))
        return acc


def _mat_inverse(rows: Sequence[Sequence[int]], p: int):
    """Inverse of a square matrix over F_p by Gauss-Jordan, or None if singular."""
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] % p), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(r[n:]) for r in aug)


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int], p: int) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) % p for row in m)


@dataclass(frozen=True)
class NormalBasis:
    """alpha with alpha, alpha^p, ..., alpha^(p^(n-1)) linearly independent.

    Column k of `to_poly` holds the coordinates of alpha^(p^k); `to_normal`
    is its inverse.
    """

    ext: ExtensionField
    alpha: Elem
    to_poly: tuple
    to_normal: tuple

    def poly_coords(self, normal: Sequence[int]) -> Elem:
        return mat_vec(self.to_poly, normal, self.ext.p)

    def normal_coords(self, elem: Elem) -> tuple:
        return mat_vec(self.to_normal, elem, self.ext.p)


def normal_basis_from(ext: ExtensionField, alpha: Sequence[int]) -> Optional[NormalBasis]:
    """The normal basis generated by alpha, or None if its conjugates are dependent."""
    alpha = ext.element(alpha)
    cols = ext.conjugates(alpha)
    to_poly = tuple(tuple(col[i] for col in cols) for i in range(ext.n))
    to_normal = _mat_inverse(to_poly, ext.p)
    if to_normal is None:
        return None
    return NormalBasis(ext, alpha, to_poly, to_normal)


def find_normal_basis(ext: ExtensionField, rng, max_tries: Optional[int] = None) -> NormalBasis:
    """Rejection sampling over random elements, capped at 64 n tries."""
    for _ in range(max_tries or 64 * ext.n):
        alpha = tuple(rng.randrange(ext.p) for _ in range(ext.n))
        if any(alpha):
            nb = normal_basis_from(ext, alpha)
            if nb is not None:
                return nb
    raise RuntimeError(f'no normal element found in {ext}')


def gamma_from_word(lam: Sequence[int], nb: NormalBasis) -> Elem:
    """lam_1 alpha + lam_2 alpha^p + ... + lam_n alpha^(p^(n-1))."""
    lam = tuple(lam)
    if len(lam) != nb.ext.n:
        raise ContractError(f'word length {len(lam)} differs from degree {nb.ext.n}')
    if any(not 0 <= s < nb.ext.p for s in lam):
        raise ContractError(f'word symbols must lie in F_{nb.ext.p}')
    return nb.poly_coords(lam)


def frobenius_normal(coords: Sequence[int], k: int = 1) -> Word:
    """Normal coordinates of gamma^(p^k) given those of gamma.

    The p-th power moves the coefficient of alpha^(p^i) onto alpha^(p^(i+1)),
    so k applications are a cyclic shift right by k.
    """
    coords = tuple(coords)
    if not coords:
        return coords
    k %= len(coords)
    return coords[len(coords) - k:] + coords[:len(coords) - k]


def minimal_polynomial(gamma: Elem, ext: ExtensionField,
                       conjugates: Optional[Sequence[Elem]] = None) -> Poly:
    """(x - gamma)(x - gamma^p)...(x - gamma^(p^(n-1))) as a polynomial over F_p.

    Pass `conjugates` when they are already known (e.g. as rotations in a
    normal basis) to skip the Frobenius powers.
    """
    conj = list(conjugates) if conjugates is not None else ext.conjugates(gamma)
    if len(conj) != ext.n or conj[0] != tuple(gamma):
        raise ContractError('conjugate list must start with gamma and have n entries')
    if len(set(conj)) != ext.n:
        raise DegreeCollapse(f'conjugates of {gamma} are not distinct')
    # coefficients over the extension, lowest degree first
    g = [ext.one]
    for c in conj:
        neg_c = ext.neg(c)
        nxt = [ext.zero] * (len(g) + 1)
        for i, coef in enumerate(g):
            nxt[i + 1] = ext.add(nxt[i + 1], coef)
            nxt[i] = ext.add(nxt[i], ext.mul(coef, neg_c))
        g = nxt
    out = []
    for k, coef in enumerate(g):
        if any(coef[1:]):
            raise ConsistencyError(f'coefficient {k} of the minimal polynomial is {coef}, not in F_{ext.p}')
        out.append(coef[0])
    return tuple(out)
