"""
圖形描述語言與邊列表解析器

語法（忽略空白）：
    P4 C7 K5 S4 F10 W9 Petersen
    corona(P2; C7, C8)      每個基底頂點一個附掛圖；只給一個時複製到全部基底頂點
    join(K1; P6)
    comp(C7)
    @graphs/h.txt           邊列表檔案：首行 "n m"，之後 m 行 "u v"，# 之後為註解
"""

import re
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from loguru import logger

from core.constructions import complement, complete, corona, cycle, fan, join, path, petersen, star, wheel
from core.errors import InvalidEdge, InvalidOrder, ParseError
from core.graph_core import Graph
from models.schemas import CoronaSpec

FAMILIES: Dict[str, Callable[[int], Graph]] = {
    "P": path,
    "C": cycle,
    "K": complete,
    "S": star,
    "F": fan,
    "W": wheel,
}

Token = Tuple[str, str, int]


class FamilyParser:
    """圖形描述語言解析器"""

    def __init__(self):
        self.token_pattern = re.compile(
            r"\s*(?:(?P<path>@[^;,()\s]+)|(?P<name>[A-Za-z]+)|(?P<int>\d+)|(?P<punct>[();,]))"
        )
        self.range_pattern = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$")
        self.comment_pattern = re.compile(r"#.*$")

    # ========== 描述語言 ==========

    def parse(self, expr: str) -> Graph:
        """
        解析單一圖形描述

        Args:
            expr: 描述字串

        Returns:
            Graph: 建構後的圖
        """
        tokens = self._tokenize(expr)
        graph, pos = self._parse_expr(tokens, 0, expr)
        if pos != len(tokens):
            raise ParseError(f"多餘的內容 {tokens[pos][1]!r}（位置 {tokens[pos][2]}）: {expr!r}")
        logger.debug(f"🔍 解析 {expr!r}: n={graph.order}, m={graph.size}")
        return graph

    def parse_family(self, expr: str) -> List[Graph]:
        """以逗號分隔的圖形描述列表"""
        tokens = self._tokenize(expr)
        graphs, pos = self._parse_list(tokens, 0, expr)
        if pos != len(tokens):
            raise ParseError(f"多餘的內容 {tokens[pos][1]!r}（位置 {tokens[pos][2]}）: {expr!r}")
        return graphs

    def parse_corona_spec(self, base_expr: str, attach_expr: str) -> CoronaSpec:
        """由 --base 與 --attach 建立冠積描述"""
        base = self.parse(base_expr)
        return self._corona_spec(base, self.parse_family(attach_expr))

    def _corona_spec(self, base: Graph, attachments: List[Graph]) -> CoronaSpec:
        if len(attachments) == 1 and base.order > 1:
            attachments = attachments * base.order
        spec = CoronaSpec(base=base, attachments=tuple(attachments))
        spec.validate()
        return spec

    def _tokenize(self, expr: str) -> List[Token]:
        tokens: List[Token] = []
        pos = 0
        text = expr.rstrip()
        while pos < len(text):
            m = self.token_pattern.match(text, pos)
            if not m:
                raise ParseError(f"無法辨識的字元 {text[pos]!r}（位置 {pos}）: {expr!r}")
            kind = m.lastgroup
            tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        if not tokens:
            raise ParseError("空的圖形描述")
        return tokens

    def _expect(self, tokens: List[Token], pos: int, value: str, expr: str) -> int:
        if pos >= len(tokens) or tokens[pos][1] != value:
            found = tokens[pos][1] if pos < len(tokens) else "結尾"
            raise ParseError(f"預期 {value!r}，但得到 {found!r}: {expr!r}")
        return pos + 1

    def _parse_list(self, tokens: List[Token], pos: int, expr: str) -> Tuple[List[Graph], int]:
        graph, pos = self._parse_expr(tokens, pos, expr)
        graphs = [graph]
        while pos < len(tokens) and tokens[pos][1] == ",":
            graph, pos = self._parse_expr(tokens, pos + 1, expr)
            graphs.append(graph)
        return graphs, pos

    def _parse_expr(self, tokens: List[Token], pos: int, expr: str) -> Tuple[Graph, int]:
        if pos >= len(tokens):
            raise ParseError(f"描述不完整: {expr!r}")
        kind, value, _ = tokens[pos]

        if kind == "path":
            return self.load_edge_list(value[1:]), pos + 1

        if kind != "name":
            raise ParseError(f"預期圖形名稱，但得到 {value!r}: {expr!r}")

        keyword = value.lower()
        if keyword == "petersen":
            return petersen(), pos + 1

        if keyword == "corona":
            pos = self._expect(tokens, pos + 1, "(", expr)
            base, pos = self._parse_expr(tokens, pos, expr)
            pos = self._expect(tokens, pos, ";", expr)
            attachments, pos = self._parse_list(tokens, pos, expr)
            pos = self._expect(tokens, pos, ")", expr)
            graph, _ = corona(self._corona_spec(base, attachments))
            return graph, pos

        if keyword == "join":
            pos = self._expect(tokens, pos + 1, "(", expr)
            left, pos = self._parse_expr(tokens, pos, expr)
            pos = self._expect(tokens, pos, ";", expr)
            right, pos = self._parse_expr(tokens, pos, expr)
            pos = self._expect(tokens, pos, ")", expr)
            graph, _ = join(left, right)
            return graph, pos

        if keyword == "comp":
            pos = self._expect(tokens, pos + 1, "(", expr)
            inner, pos = self._parse_expr(tokens, pos, expr)
            pos = self._expect(tokens, pos, ")", expr)
            return complement(inner), pos

        family = FAMILIES.get(value.upper())
        if family is None or len(value) != 1:
            raise ParseError(f"未知的圖族 {value!r}: {expr!r}")
        if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "int":
            raise ParseError(f"{value} 後面需要階數: {expr!r}")
        return family(int(tokens[pos + 1][1])), pos + 2

    # ========== 邊列表 ==========

    def load_edge_list(self, file_path: str) -> Graph:
        try:
            content = Path(file_path).read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"無法讀取邊列表 {file_path}: {e}")
        return self.parse_edge_list(content, source=file_path)

    def parse_edge_list(self, content: str, source: str = "<edges>") -> Graph:
        """
        解析邊列表內容

        Args:
            content: 首行 "n m"，之後 m 行 "u v"
            source: 錯誤訊息中的來源名稱

        Returns:
            Graph: 解析後的圖
        """
        lines = []
        for number, raw in enumerate(content.splitlines(), start=1):
            line = self.comment_pattern.sub("", raw).strip()
            if line:
                lines.append((number, line.split()))

        if not lines:
            raise ParseError(f"{source}: 檔案是空的")

        number, header = lines[0]
        n, m = self._int_pair(header, source, number)
        edges = []
        for number, fields in lines[1:]:
            u, v = self._int_pair(fields, source, number)
            if u >= v:
                raise ParseError(f"{source}:{number}: 邊必須寫成 u < v: {u} {v}")
            edges.append((u, v))

        if len(edges) != m:
            raise ParseError(f"{source}: 標頭宣告 {m} 條邊，實際有 {len(edges)} 條")

        try:
            graph = Graph.from_edges(n, edges)
        except (InvalidEdge, InvalidOrder) as e:
            raise ParseError(f"{source}: {e}")
        logger.info(f"✅ 讀取邊列表 {source}: n={n}, m={m}")
        return graph

    def _int_pair(self, fields: List[str], source: str, number: int) -> Tuple[int, int]:
        if len(fields) != 2:
            raise ParseError(f"{source}:{number}: 每行需要兩個整數，得到 {' '.join(fields)!r}")
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"{source}:{number}: 不是整數: {' '.join(fields)!r}")

    # ========== 範圍 ==========

    def parse_range(self, text: str) -> range:
        """'a..b'（含兩端）或單一整數 'a'"""
        m = self.range_pattern.match(text)
        if not m:
            raise ParseError(f"範圍格式應為 a..b 或 a: {text!r}")
        start = int(m.group(1))
        stop = int(m.group(2)) if m.group(2) is not None else start
        if stop < start:
            raise ParseError(f"範圍上限小於下限: {text!r}")
        return range(start, stop + 1)
