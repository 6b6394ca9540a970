import logging
from typing import Iterable

from corpus.exceptions import (
    EmptyAfterPreprocessingException,
    EmptySequenceException,
    InvalidStripBytesException,
)
from corpus.models import DEFAULT_STRIP_BYTES, CorpusText, ListOrderPolicy
from listcore.models import ListState, RequestSequence


logger = logging.getLogger(__name__)


class CorpusService:
    @staticmethod
    def parse_strip_bytes(spec: str) -> frozenset:
        """'20,0d,0a' -> {0x20, 0x0D, 0x0A}; an optional 0x prefix is accepted."""
        try:
            values = {
                int(token.strip(), 16) for token in spec.split(",") if token.strip()
            }
        except ValueError:
            raise InvalidStripBytesException(f"not a hex byte list: {spec!r}")
        if any(not 0 <= value <= 0xFF for value in values):
            raise InvalidStripBytesException(f"byte out of range in {spec!r}")
        return frozenset(values)

    @staticmethod
    def preprocess(
        text: CorpusText, strip_bytes: Iterable[int] = DEFAULT_STRIP_BYTES
    ) -> RequestSequence:
        stripped: bytes = text.data.translate(None, delete=bytes(sorted(strip_bytes)))
        if not stripped:
            raise EmptyAfterPreprocessingException(
                f"{text.source_name or '<text>'}: {len(text.data)} bytes, none kept"
            )
        logger.debug(
            "preprocessed %s: %d -> %d bytes",
            text.source_name,
            len(text.data),
            len(stripped),
        )
        return RequestSequence.of(stripped, source_name=text.source_name)

    @staticmethod
    def derive_list(
        sequence: RequestSequence,
        policy: ListOrderPolicy = ListOrderPolicy.FIRST_OCCURRENCE,
    ) -> ListState:
        if not len(sequence):
            raise EmptySequenceException(sequence.source_name or None)
        symbols = sequence.alphabet()
        if policy is ListOrderPolicy.BYTE_VALUE_ASCENDING:
            symbols = sorted(symbols)
        return ListState.from_symbols(symbols)


corpus_service = CorpusService()
