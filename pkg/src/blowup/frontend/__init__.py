"""Session language, runner, reports and corpus generation."""

from .corpus import CorpusConfig, monomial_corpus
from .parser import SessionAST, SessionError, parse_session
from .report import RunReport, emit_report, parse_report
from .session import RunConfig, run_corpus, run_session

__all__ = [
    "CorpusConfig",
    "RunConfig",
    "RunReport",
    "SessionAST",
    "SessionError",
    "emit_report",
    "monomial_corpus",
    "parse_report",
    "parse_session",
    "run_corpus",
    "run_session",
]
