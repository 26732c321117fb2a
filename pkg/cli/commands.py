# cli/commands.py
"""
Command implementations; each returns OutputRecords (or CSV text) for main.py to write
"""
import logging
from typing import Callable, List, Optional, Union

import pandas as pd

from algebra.theorems import (
    augment_zero_sum,
    check_homogeneous_ap_theorem,
    check_prodset_theorem,
    check_scalar_theorem,
    check_scaled_difference,
    check_sumset2_theorem,
    check_union_t_condition,
    extend_by_balanced_pairs,
)
from census.bounds import ap_lower_bound, harmonic_ratio
from census.enumerator import census, enumerate_complete
from census.growth import growth_frame, growth_table, growth_row
from census.schemas import GrowthFlavor
from cli.output import OutputRecord, certificate_payload, frame_to_csv, set_payload, theorem_payload
from conjectures.primes import scan_prime_conjecture, summarize
from conjectures.schemas import ScanSummary
from conjectures.searches import DEGENERATE_RATIOS, complete_extension, geometric_search, translate_search
from core.completeness import certificate, make_set, normal_form
from core.schemas import IntSet
from utils.decorators import handle_domain_errors
from utils.errors import InvalidParameter
from utils.validators import SetLiteralParser

logger = logging.getLogger(__name__)

THEOREM_PARTS = ('prodset', 'union', 'augment', 'scaled', 'sumset2', 'scale', 'ap', 'grow')
CONJECTURES = ('primes', 'extend', 'geometric', 'translate')


def parse_set(literal: str) -> IntSet:
    return make_set(SetLiteralParser.parse(literal))


@handle_domain_errors
def cmd_check(set_literal: str) -> OutputRecord:
    cert = certificate(parse_set(set_literal))
    return OutputRecord(command='check', payload=certificate_payload(cert))


@handle_domain_errors
def cmd_normal_form(set_literal: str) -> OutputRecord:
    result = normal_form(parse_set(set_literal))
    return OutputRecord(command='normal-form', payload={
        'original': result.original.as_list(),
        'd': result.d,
        'normalized': result.normalized.as_list(),
    })


@handle_domain_errors
def cmd_census(n: int, min_size: int = 2, fmt: str = 'json', threads: Optional[int] = None,
               histogram: bool = False) -> Union[OutputRecord, str]:
    report = census(n, min_size=min_size, workers=threads)
    if fmt == 'csv':
        summary = pd.DataFrame(
            [[report.n, report.min_size, report.total, report.ap_lower_bound]],
            columns=['N', 'min_size', 'total', 'ap_lower_bound'],
        )
        text = frame_to_csv(summary)
        if histogram:
            sizes = pd.DataFrame(sorted(report.by_size.items()), columns=['size', 'count'])
            text += '\n' + frame_to_csv(sizes)
        return text

    payload = report.model_dump(mode='json')
    if not histogram:
        payload.pop('by_size')
    return OutputRecord(command='census', payload=payload)


@handle_domain_errors
def cmd_enumerate(n: int, emit: Callable[[OutputRecord], None], min_size: int = 2,
                  max_size: Optional[int] = None, threads: Optional[int] = None) -> int:
    """Emit one record per complete subset in bitmask order, then a count record"""
    def sink(subset: IntSet):
        emit(OutputRecord(command='enumerate', payload={'elements': subset.as_list()}))

    count = enumerate_complete(n, min_size, max_size if max_size is not None else max(n, min_size), sink, workers=threads)
    emit(OutputRecord(command='enumerate', payload={'summary': {'n': n, 'count': count}}))
    return count


@handle_domain_errors
def cmd_ap_bound(n: int) -> OutputRecord:
    payload = {'n': n, 'ap_lower_bound': ap_lower_bound(n)}
    if n >= 3:
        payload['ratio_lower'] = growth_row(n, payload['ap_lower_bound'], GrowthFlavor.AP_BOUND).ratio_lower
    if n >= 2:
        payload['harmonic_ratio'] = harmonic_ratio(n)
    return OutputRecord(command='ap-bound', payload=payload)


@handle_domain_errors
def cmd_growth(ns: List[int], exact_up_to: int, fmt: str = 'json',
               threads: Optional[int] = None) -> Union[OutputRecord, str]:
    rows = growth_table(ns, exact_up_to, workers=threads)
    if fmt == 'csv':
        return frame_to_csv(growth_frame(rows))
    return OutputRecord(command='growth', payload={'rows': [row.model_dump(mode='json') for row in rows]})


@handle_domain_errors
def cmd_theorem(part: str, sets: List[str], parameter: Optional[int] = None) -> OutputRecord:
    """
    Run one closure-theorem checker

    Args:
        part: One of THEOREM_PARTS
        sets: Set literals the part needs (two for prodset/union/augment, else one)
        parameter: t for scaled, q for scale, pairs for grow, (d, n) packed as sets for ap
    """
    def need_sets(count: int) -> List[IntSet]:
        if len(sets) != count:
            raise InvalidParameter(f"theorem {part} needs {count} set literal(s), got {len(sets)}")
        return [parse_set(literal) for literal in sets]

    def need_parameter(name: str) -> int:
        if parameter is None:
            raise InvalidParameter(f"theorem {part} needs --{name}")
        return parameter

    if part == 'prodset':
        report = check_prodset_theorem(*need_sets(2))
    elif part == 'union':
        report = check_union_t_condition(*need_sets(2))
    elif part == 'augment':
        report = augment_zero_sum(*need_sets(2))
    elif part == 'scaled':
        report = check_scaled_difference(need_sets(1)[0], need_parameter('t'))
    elif part == 'sumset2':
        report = check_sumset2_theorem(need_sets(1)[0])
    elif part == 'scale':
        report = check_scalar_theorem(need_sets(1)[0], need_parameter('q'))
    elif part == 'grow':
        report = extend_by_balanced_pairs(need_sets(1)[0], need_parameter('pairs'))
    elif part == 'ap':
        values = SetLiteralParser.parse(sets[0]) if len(sets) == 1 else []
        if len(values) != 2:
            raise InvalidParameter("theorem ap needs one literal 'd,n'")
        report = check_homogeneous_ap_theorem(*values)
    else:
        raise InvalidParameter(f"Unknown theorem part {part!r}; choose from {THEOREM_PARTS}")

    return OutputRecord(command=f'theorem {part}', payload=theorem_payload(report))


def cmd_conjecture(name: str, set_literal: Optional[str] = None, max_n: int = 7, include_even: bool = False,
                   bound: int = 100, max_added: int = 1, r_min: int = -10, r_max: int = 10,
                   n_max: int = 12, max_shift: int = 10, threads: Optional[int] = None) -> List[OutputRecord]:
    """One record per finding, summary record last"""
    command = f'conjecture {name}'
    run = handle_domain_errors(_run_conjecture)
    findings, summary = run(name, set_literal, max_n, include_even, bound, max_added,
                            r_min, r_max, n_max, max_shift, threads)
    records = [OutputRecord(command=command, payload=finding) for finding in findings]
    records.append(OutputRecord(command=command, payload={'summary': summary.model_dump(mode='json')}))
    return records


def _run_conjecture(name, set_literal, max_n, include_even, bound, max_added,
                    r_min, r_max, n_max, max_shift, threads):
    if name == 'primes':
        findings = scan_prime_conjecture(max_n, include_even=include_even, workers=threads)
        payloads = []
        for finding in findings:
            payload = finding.model_dump(mode='json')
            payload['primes'] = finding.primes.as_list()
            payloads.append(payload)
        return payloads, summarize(findings)

    if name == 'geometric':
        findings = geometric_search(r_min, r_max, n_max)
        payloads = [{'r': f.r, 'n': f.n, 'sum': str(f.total), 'witness': str(f.witness)} for f in findings]
        ratios = [r for r in range(r_min, r_max + 1) if r not in DEGENERATE_RATIOS]
        return payloads, ScanSummary(scanned=len(ratios) * (n_max - 1), holds=len(findings))

    if set_literal is None:
        raise InvalidParameter(f"conjecture {name} needs --set")
    base = parse_set(set_literal)

    if name == 'extend':
        result = complete_extension(base, bound, max_added)
        if result is None:
            return [{'base': base.as_list(), 'added': None, 'combined_complete': False,
                     'search_bound': bound}], ScanSummary(scanned=1, holds=0, violations=[1])
        return [{'base': base.as_list(), 'added': result.added.as_list(),
                 'combined_complete': result.combined_complete,
                 'search_bound': bound}], ScanSummary(scanned=1, holds=1)

    if name == 'translate':
        result = translate_search(base, max_shift)
        payload = {'base': base.as_list(), 's': result.s, 'translated': set_payload(result.translated),
                   'witness': None if result.witness is None else str(result.witness),
                   'search_bound': max_shift}
        found = result.s is not None
        return [payload], ScanSummary(scanned=1, holds=int(found), violations=[] if found else [1])

    raise InvalidParameter(f"Unknown conjecture {name!r}; choose from {CONJECTURES}")
