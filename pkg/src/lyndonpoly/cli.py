"""Command-line front end.

Exit codes: 0 success (or membership true), 1 membership false, 2 usage
error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from typing import Iterable, List, Optional

from .finite_field import ConsistencyError, DegreeCollapse, is_prime
from .lyndon_enum import (
    EnumState,
    UpdateTally,
    count_lyndon,
    duval_plain_next_instrumented,
    enumerate_all,
)
from .pipeline import BASES, MODES, EnumConfig, EnumRecord, preprocess, run, verify_stream
from .suffix_membership import membership
from .words import ContractError, format_word, is_lyndon_naive, parse_word

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(lines: Iterable[str], quiet: bool, out=None) -> int:
    """Write lines unbuffered, or in quiet mode only latency statistics."""
    out = out or sys.stdout
    latencies: List[float] = []
    count = 0
    t0 = time.perf_counter()
    for line in lines:
        t1 = time.perf_counter()
        latencies.append(t1 - t0)
        count += 1
        if not quiet:
            out.write(line + '\n')
            out.flush()
        t0 = time.perf_counter()
    if quiet:
        us = sorted(x * 1e6 for x in latencies) or [0.0]
        out.write(
            f'records={count} mean_us={statistics.fmean(us):.1f} '
            f'p50_us={us[len(us) // 2]:.1f} p99_us={us[min(len(us) - 1, int(len(us) * 0.99))]:.1f} '
            f'max_us={us[-1]:.1f}\n'
        )
    return count


def _check_q(q: int) -> int:
    if q < 2:
        raise UsageError(f'alphabet size must be >= 2, got {q}')
    return q


def _check_n(n: int) -> int:
    if n < 1:
        raise UsageError(f'length must be >= 1, got {n}')
    return n


def _check_p(p: int) -> int:
    if not is_prime(p):
        raise UsageError(f'{p} is not a prime')
    return p


def cmd_lyndon(args) -> int:
    q, n = _check_q(args.q), _check_n(args.n)
    if args.action == 'count':
        print(count_lyndon(n, q))
        return EXIT_OK
    if args.action == 'list':
        words = enumerate_all(n, q)
        if args.limit is not None:
            words = (w for w, _ in zip(words, range(args.limit)))
        if args.format == 'jsonl':
            lines = (EnumRecord(w).to_json() for w in words)
        else:
            lines = (format_word(w, q) for w in words)
        _emit(lines, args.quiet)
        return EXIT_OK
    if args.word is None:
        raise UsageError(f'lyndon {args.action} needs a word')
    w = parse_word(args.word, q)
    if len(w) != n:
        raise UsageError(f'word has length {len(w)}, expected --n {n}')
    if args.action == 'next':
        state = EnumState(n, q, w)
        print(format_word(state.word(), q) if state.advance() else 'exhausted')
        return EXIT_OK
    # check
    result = membership(w, n, q)
    if args.verify and result.is_lyndon != is_lyndon_naive(w):
        print(f'suffix-tree and naive tests disagree on {args.word}', file=sys.stderr)
        return EXIT_INTERNAL
    print('lyndon' if result.is_lyndon else 'not lyndon')
    return EXIT_OK if result.is_lyndon else EXIT_FALSE


def cmd_irred(args) -> int:
    p, n = _check_p(args.q), _check_n(args.n)
    if args.action == 'count':
        print(count_lyndon(n, p))
        return EXIT_OK
    cfg = EnumConfig(p, n, mode=args.mode, limit=args.limit, seed=args.seed, root_basis=args.basis)
    ctx = preprocess(cfg)
    if args.action == 'verify':
        report = verify_stream(run(cfg, ctx), ctx, complete=cfg.limit is None)
        print(report)
        return EXIT_OK if report.ok else EXIT_INTERNAL
    records = run(cfg, ctx)
    if args.format == 'jsonl':
        lines = (r.to_json() for r in records)
    else:
        lines = (r.to_text(p) for r in records)
    _emit(lines, args.quiet)
    return EXIT_OK


def bench_cat(n: int, q: int) -> dict:
    tally = UpdateTally()
    for _ in enumerate_all(n, q, tally):
        pass
    return {
        'n': n,
        'q': q,
        'words': tally.words,
        'total_updates': tally.total,
        'amortized': float(tally.amortized),
        'bound': 1 + 3 * q / (q - 1) ** 2,
        'max_step': tally.max_step,
    }


def pathological_word(k: int) -> tuple:
    """0 1^k 0 1^(k+1), a Lyndon word of length 2k+3."""
    return (0,) + (1,) * k + (0,) + (1,) * (k + 1)


def bench_pathological(k: int) -> dict:
    w = pathological_word(k)
    n = len(w)
    plain_next, plain = duval_plain_next_instrumented(w, n, 2)
    state = EnumState(n, 2, w)
    state.advance()
    if state.word() != plain_next:
        raise ConsistencyError('plain and compressed successors differ')
    return {'k': k, 'n': n, 'plain_updates': plain, 'compressed_updates': state.last_updates}


def cmd_bench(args) -> int:
    if args.action == 'cat':
        rows = [bench_cat(_check_n(args.n), _check_q(args.q))]
        cols = ['n', 'q', 'words', 'total_updates', 'amortized', 'bound']
    else:
        if any(k < 0 for k in args.k):
            raise UsageError('k must be >= 0')
        rows = [bench_pathological(k) for k in args.k]
        cols = ['k', 'n', 'plain_updates', 'compressed_updates']
    if args.format == 'csv':
        print(','.join(cols))
    for row in rows:
        vals = {c: (f'{row[c]:.4f}' if isinstance(row[c], float) else str(row[c])) for c in row}
        if args.format == 'csv':
            print(','.join(vals[c] for c in cols))
        else:
            print(' '.join(f'{c}={v}' for c, v in vals.items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='lyndonpoly',
        description='Lyndon words of length n and irreducible polynomials of degree n over F_p.',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p, default_format='text', formats=('text', 'jsonl')):
        p.add_argument('--q', '--p', dest='q', type=int, default=2, help='alphabet size / prime')
        p.add_argument('--n', type=int, default=6, help='word length / degree')
        p.add_argument('--limit', type=int, default=None)
        p.add_argument('--seed', type=int, default=0)
        p.add_argument('--format', choices=formats, default=default_format)
        p.add_argument('--quiet', action='store_true', help='print only latency statistics')

    ly = sub.add_parser('lyndon', help='Lyndon word enumeration and membership')
    ly.add_argument('action', choices=('list', 'next', 'count', 'check'))
    ly.add_argument('word', nargs='?')
    ly.add_argument('--verify', action='store_true', help='cross-check membership naively')
    common(ly)
    ly.set_defaults(func=cmd_lyndon)

    ir = sub.add_parser('irred', help='irreducible polynomials and their roots')
    ir.add_argument('action', choices=('list', 'count', 'verify'))
    ir.add_argument('--mode', choices=MODES, default='polynomials')
    ir.add_argument('--basis', choices=BASES, default='normal')
    common(ir)
    ir.set_defaults(func=cmd_irred)

    be = sub.add_parser('bench', help='update-count benchmarks')
    be.add_argument('action', choices=('cat', 'pathological'))
    be.add_argument('--k', type=int, nargs='+', default=[10])
    common(be, formats=('text', 'csv'))
    be.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.limit is not None and args.limit < 0:
        parser.error('--limit must be non-negative')
    try:
        return args.func(args)
    except (UsageError, ContractError) as exc:
        print(f'{parser.prog}: error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    except (ConsistencyError, DegreeCollapse) as exc:
        print(f'{parser.prog}: internal error: {exc}', file=sys.stderr)
        return EXIT_INTERNAL
    except BrokenPipeError:
        return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
