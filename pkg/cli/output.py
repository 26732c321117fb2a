# cli/output.py
"""
Machine-readable output: one JSON document per record, or CSV tables
"""
import io
import sys
from typing import Any, Dict, Optional, TextIO

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from algebra.schemas import TheoremReport
from core.schemas import Certificate, IntSet
from utils.errors import CompleteSetError

SCHEMA_VERSION = '1'


class OutputRecord(BaseModel):
    """Envelope of every document the CLI writes"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    schema_version: str = Field(default=SCHEMA_VERSION)
    command: str
    payload: Dict[str, Any] = Field(default_factory=dict)


def error_record(command: str, error: CompleteSetError) -> OutputRecord:
    return OutputRecord(command=command, payload={'error': error.to_dict()})


def write_record(record: OutputRecord, stream: Optional[TextIO] = None):
    """One compact JSON document per line"""
    stream = stream or sys.stdout
    stream.write(record.model_dump_json() + '\n')


def frame_to_csv(frame: pd.DataFrame) -> str:
    """Locale-independent CSV: ASCII digits, commas, \\n line endings"""
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator='\n')
    return buffer.getvalue()


def _big(value: Optional[int]) -> Optional[str]:
    return None if value is None else str(value)


def set_payload(a: Optional[IntSet]):
    return None if a is None else a.as_list()


def certificate_payload(cert: Certificate) -> Dict[str, Any]:
    return {
        'elements': cert.set.as_list(),
        'sum': cert.sum,
        'complete': cert.complete,
        'witness': _big(cert.witness),
        'residue': cert.residue,
    }


def theorem_payload(report: TheoremReport) -> Dict[str, Any]:
    payload = report.model_dump(mode='json')
    payload['constructed'] = set_payload(report.constructed)
    payload['witness'] = _big(report.witness)
    if report.multiset is not None:
        payload['multiset']['divisible'] = report.multiset.divisible
    return payload
