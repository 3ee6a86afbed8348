from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union
import logging

from app.core.exceptions import EdgeListFormatError, GraphConstructionError
from app.graph.core import Graph, from_edge_list
from app.graph.graph6 import parse_graph6

logger = logging.getLogger(__name__)


class GraphFileParser:
    """Parser for graph corpora in graph6 or edge-list text form."""

    SUPPORTED_FORMATS = {
        "g6": "graph6",
        "edges": "edge-list",
    }

    def parse(self, text: str, fmt: Optional[str] = None) -> List[Graph]:
        """
        Parse every graph in ``text``.

        Args:
            text: File content
            fmt: "g6" or "edges"; detected from the first data line when omitted

        Returns:
            Graphs in file order
        """
        parser_type = fmt or self.detect(text)
        if parser_type == "g6":
            return list(self._parse_graph6(text))
        elif parser_type == "edges":
            return list(self._parse_edges(text))
        else:
            raise ValueError(f"Unsupported graph format: {fmt}")

    def parse_file(self, path: Union[str, Path], fmt: Optional[str] = None) -> List[Graph]:
        content = Path(path).read_text()
        graphs = self.parse(content, fmt)
        logger.info(f"Read {len(graphs)} graph(s) from {path}")
        return graphs

    @staticmethod
    def _data_lines(text: str) -> Iterator[Tuple[int, str]]:
        """Non-empty lines with '#' comments stripped, with 1-based line numbers."""
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield number, line

    def detect(self, text: str) -> str:
        for _, line in self._data_lines(text):
            return "edges" if len(line.split()) > 1 else "g6"
        return "g6"

    def _parse_graph6(self, text: str) -> Iterator[Graph]:
        for _, line in self._data_lines(text):
            yield parse_graph6(line)

    def _parse_edges(self, text: str) -> Iterator[Graph]:
        """Blocks of a "n m" header followed by m "u v" lines; duplicate edges are rejected."""
        lines = self._data_lines(text)
        for number, header in lines:
            n, m = self._pair(number, header)
            if n < 0 or m < 0:
                raise EdgeListFormatError(number, f"negative header values {header!r}")
            edges = []
            seen = set()
            for _ in range(m):
                entry = next(lines, None)
                if entry is None:
                    raise EdgeListFormatError(number, f"expected {m} edges, file ended after {len(edges)}")
                edge_number, edge_line = entry
                u, v = self._pair(edge_number, edge_line)
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise EdgeListFormatError(edge_number, f"duplicate edge {key}")
                seen.add(key)
                edges.append((u, v))
            try:
                yield from_edge_list(n, edges)
            except GraphConstructionError as e:
                raise EdgeListFormatError(number, e.detail)

    @staticmethod
    def _pair(number: int, line: str) -> Tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(number, f"expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(number, f"expected two integers, got {line!r}")


graph_file_parser = GraphFileParser()
