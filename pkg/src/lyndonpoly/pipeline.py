"""Enumerate the monic irreducible polynomials of degree n over F_p and their roots.

Preprocessing fixes an irreducible modulus f and a normal element alpha of
F_p[beta]/(f). Each Lyndon word lam of length n then gives the root
gamma(lam) = sum lam_k alpha^(p^(k-1)), whose conjugates are the cyclic
shifts of lam in normal coordinates, and whose minimal polynomial is an
irreducible of degree n. Lyndon words pick one word per rotation class, so
each polynomial appears exactly once.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional

from .finite_field import (
    ConsistencyError,
    ExtensionField,
    NormalBasis,
    Poly,
    PrimeField,
    find_irreducible,
    find_normal_basis,
    format_poly,
    frobenius_normal,
    gamma_from_word,
    is_irreducible,
    minimal_polynomial,
    normal_basis_from,
    parse_poly,
)
from .lyndon_enum import count_lyndon, iter_lyndon
from .words import ContractError, Word, format_word, is_aperiodic, parse_word

MODES = ('polynomials', 'polynomials_and_roots', 'roots_only')
BASES = ('normal', 'poly')


@dataclass(frozen=True)
class EnumConfig:
    p: int
    n: int
    mode: str = 'polynomials'
    limit: Optional[int] = None
    seed: int = 0
    root_basis: str = 'normal'
    # pin the preprocessing choices instead of searching for them
    modulus: Optional[Poly] = None
    alpha: Optional[tuple] = None

    def __post_init__(self):
        PrimeField(self.p)
        if not isinstance(self.n, int) or self.n < 1:
            raise ContractError(f'degree must be an integer >= 1, got {self.n!r}')
        if self.mode not in MODES:
            raise ContractError(f'mode must be one of {MODES}, got {self.mode!r}')
        if self.root_basis not in BASES:
            raise ContractError(f'root basis must be one of {BASES}, got {self.root_basis!r}')
        if self.limit is not None and self.limit < 0:
            raise ContractError('limit must be non-negative')


@dataclass(frozen=True)
class PipelineCtx:
    field: PrimeField
    ext: ExtensionField
    basis: NormalBasis
    start: Word


@dataclass(frozen=True)
class EnumRecord:
    lyndon: Word
    polynomial: Optional[Poly] = None
    roots: Optional[tuple] = None
    basis: str = 'normal'

    def to_text(self, p: int) -> str:
        parts = [f'lyndon={format_word(self.lyndon, p)}']
        if self.polynomial is not None:
            parts.append(f'poly={format_poly(self.polynomial)}')
        if self.roots is not None:
            parts.append('roots=' + ';'.join(','.join(map(str, r)) for r in self.roots))
            parts.append(f'basis={self.basis}')
        return ' '.join(parts)

    def to_json(self) -> str:
        obj = {'lyndon': list(self.lyndon)}
        if self.polynomial is not None:
            obj['poly'] = list(self.polynomial)
        if self.roots is not None:
            obj['roots'] = [list(r) for r in self.roots]
            obj['basis'] = self.basis
        return json.dumps(obj, separators=(',', ':'))

    @classmethod
    def from_text(cls, line: str, p: int) -> 'EnumRecord':
        fields = dict(tok.split('=', 1) for tok in line.split())
        roots = None
        if 'roots' in fields:
            roots = tuple(tuple(int(c) for c in r.split(',')) for r in fields['roots'].split(';'))
        return cls(
            lyndon=parse_word(fields['lyndon'], p),
            polynomial=parse_poly(fields['poly']) if 'poly' in fields else None,
            roots=roots,
            basis=fields.get('basis', 'normal'),
        )

    @classmethod
    def from_json(cls, line: str) -> 'EnumRecord':
        obj = json.loads(line)
        roots = obj.get('roots')
        return cls(
            lyndon=tuple(obj['lyndon']),
            polynomial=tuple(obj['poly']) if 'poly' in obj else None,
            roots=tuple(tuple(r) for r in roots) if roots is not None else None,
            basis=obj.get('basis', 'normal'),
        )


def preprocess(cfg: EnumConfig) -> PipelineCtx:
    """Pick f and alpha (deterministic in cfg.seed) and the first Lyndon word."""
    rng = random.Random(cfg.seed)
    F = PrimeField(cfg.p)
    if cfg.modulus is not None:
        ext = ExtensionField(F, cfg.modulus)
        if ext.n != cfg.n:
            raise ContractError(f'pinned modulus has degree {ext.n}, expected {cfg.n}')
    else:
        ext = ExtensionField(F, find_irreducible(cfg.n, F, rng), check=False)
    if cfg.alpha is not None:
        nb = normal_basis_from(ext, cfg.alpha)
        if nb is None:
            raise ContractError(f'{cfg.alpha} does not generate a normal basis')
    else:
        nb = find_normal_basis(ext, rng)
    start = (0,) if cfg.n == 1 else (0,) * (cfg.n - 1) + (1,)
    return PipelineCtx(F, ext, nb, start)


def make_record(lam: Word, ctx: PipelineCtx, mode: str, root_basis: str = 'normal') -> EnumRecord:
    n = ctx.ext.n
    if mode == 'roots_only':
        root = gamma_from_word(lam, ctx.basis) if root_basis == 'poly' else tuple(lam)
        return EnumRecord(lam, roots=(root,), basis=root_basis)
    normal_roots = [frobenius_normal(lam, k) for k in range(n)]
    poly_roots = [ctx.basis.poly_coords(r) for r in normal_roots]
    g = minimal_polynomial(poly_roots[0], ctx.ext, conjugates=poly_roots)
    if mode == 'polynomials':
        return EnumRecord(lam, polynomial=g)
    roots = poly_roots if root_basis == 'poly' else normal_roots
    return EnumRecord(lam, polynomial=g, roots=tuple(roots), basis=root_basis)


def run(cfg: EnumConfig, ctx: Optional[PipelineCtx] = None) -> Iterator[EnumRecord]:
    """Stream one record per Lyndon word of length n, in lexicographic order."""
    ctx = ctx or preprocess(cfg)
    if cfg.limit == 0:
        return
    for emitted, lam in enumerate(iter_lyndon(cfg.n, cfg.p), start=1):
        yield make_record(lam, ctx, cfg.mode, cfg.root_basis)
        if cfg.limit is not None and emitted >= cfg.limit:
            return


@dataclass
class VerifyReport:
    count: int = 0
    expected: Optional[int] = None
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.ok:
            return f'OK count={self.count}'
        return f'FAIL count={self.count}\n' + '\n'.join(f'  {f}' for f in self.failures)


def verify_stream(records: Iterable[EnumRecord], ctx: PipelineCtx,
                  complete: bool = True, sample_every: int = 1) -> VerifyReport:
    """Check a stream of records; problems are collected, never raised.

    With ``complete=False`` the total-count check is skipped. Roots are
    substituted into the polynomial for every `sample_every`-th record.
    """
    F, ext = ctx.field, ctx.ext
    n = ext.n
    report = VerifyReport()
    seen: dict = {}
    for idx, rec in enumerate(records):
        report.count += 1
        tag = format_word(rec.lyndon, F.p)
        try:
            g = rec.polynomial
            if g is not None:
                if g in seen:
                    report.failures.append(f'{tag}: polynomial {format_poly(g)} already emitted for {seen[g]}')
                else:
                    seen[g] = tag
                if len(g) != n + 1 or g[-1] != 1:
                    report.failures.append(f'{tag}: {format_poly(g)} is not monic of degree {n}')
                elif not is_irreducible(g, F):
                    report.failures.append(f'{tag}: {format_poly(g)} is reducible')
            if rec.roots is not None:
                roots = list(rec.roots)
                if len(set(roots)) != len(roots):
                    report.failures.append(f'{tag}: repeated roots')
                if g is not None and len(roots) != n:
                    report.failures.append(f'{tag}: {len(roots)} roots, expected {n}')
                if g is None:
                    normal = [ctx.basis.normal_coords(r) if rec.basis == 'poly' else r for r in roots]
                    if n > 1 and not all(is_aperiodic(r) for r in normal):
                        report.failures.append(f'{tag}: root has fewer than {n} conjugates')
                if g is not None and idx % sample_every == 0:
                    for r in roots:
                        x = ctx.basis.poly_coords(r) if rec.basis == 'normal' else r
                        if any(ext.evaluate(g, x)):
                            report.failures.append(f'{tag}: g does not vanish at root {r}')
                            break
        except (ContractError, ConsistencyError, ArithmeticError) as exc:
            report.failures.append(f'{tag}: {type(exc).__name__}: {exc}')
    if complete:
        report.expected = count_lyndon(n, F.p)
        if report.count != report.expected:
            report.failures.append(f'emitted {report.count} records, expected {report.expected}')
    return report


def run_and_verify(cfg: EnumConfig) -> VerifyReport:
    ctx = preprocess(cfg)
    return verify_stream(run(cfg, ctx), ctx, complete=cfg.limit is None)
