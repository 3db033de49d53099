"""Rooted planar trees stored as preorder arenas, and the word bijection.

A Lukasiewicz word is read left to right as the preorder letter sequence of a
rooted planar tree: a letter of degree d opens a node with d+1 children.  The
decoder below runs on an explicit stack of unfilled child slots, so deep
(caterpillar-like) trees of any size are fine; nothing in this module recurses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .alphabet import DegreeTuple, TreeAlphabet
from .errors import NotAValidWordError
from .words import LukasiewiczWord

__all__ = [
    "PlanarTree",
    "word_to_tree",
    "tree_to_word",
    "height",
    "degree_census",
    "serialize",
    "SERIALIZE_FORMATS",
]

SERIALIZE_FORMATS = ("paren", "dot", "luka")


@dataclass
class PlanarTree:
    """Arena of preorder nodes: letters[i] labels node i, children[i] its kids.

    The root is node 0 and nodes are numbered in preorder (children left to
    right), which is exactly the order of the defining Lukasiewicz word.
    """

    alphabet: TreeAlphabet
    letters: list[int]
    children: list[list[int]] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def word_to_tree(word: Sequence[int], alphabet: TreeAlphabet) -> PlanarTree:
    """Decode a Lukasiewicz word into its tree.

    The stack construction doubles as a validity check: a word whose path
    touches -1 early leaves the stack empty with letters still to place, and
    a word with total != -1 leaves slots unfilled at the end.  Both raise
    NotAValidWordError, so certifying the input beforehand is not required
    for safety, just for good error messages.
    """
    n = len(word)
    if n == 0:
        raise NotAValidWordError("the empty word encodes no tree")
    degrees = alphabet.degrees
    letters = [int(x) for x in word]
    children: list[list[int]] = [[] for _ in range(n)]
    # stack entries: [node, unfilled child slots], top is the attachment point
    first_arity = degrees[letters[0]] + 1
    stack: list[list[int]] = [[0, first_arity]] if first_arity > 0 else []
    for i in range(1, n):
        if not stack:
            raise NotAValidWordError(
                f"tree complete after {i} letters but the word has {n}; "
                "not a Lukasiewicz word"
            )
        top = stack[-1]
        children[top[0]].append(i)
        top[1] -= 1
        if top[1] == 0:
            stack.pop()
        arity = degrees[letters[i]] + 1
        if arity > 0:
            stack.append([i, arity])
    if stack:
        raise NotAValidWordError(
            f"{sum(slot for _, slot in stack)} child slots left unfilled; "
            "not a Lukasiewicz word"
        )
    return PlanarTree(alphabet, letters, children)


def tree_to_word(tree: PlanarTree) -> LukasiewiczWord:
    """Preorder letter sequence of the tree (inverse of word_to_tree)."""
    out: list[int] = []
    stack = [0]
    letters = tree.letters
    children = tree.children
    while stack:
        node = stack.pop()
        out.append(letters[node])
        stack.extend(reversed(children[node]))
    return LukasiewiczWord(out)


def height(tree: PlanarTree) -> int:
    """Largest node depth; 0 for a single leaf."""
    best = 0
    stack = [(0, 0)]
    children = tree.children
    while stack:
        node, depth = stack.pop()
        if depth > best:
            best = depth
        for child in children[node]:
            stack.append((child, depth + 1))
    return best


def degree_census(tree: PlanarTree) -> DegreeTuple:
    """How many nodes carry each letter; always f-valid for a real tree."""
    counts = [0] * tree.alphabet.k
    for letter in tree.letters:
        counts[letter] += 1
    return DegreeTuple(tuple(counts))


def serialize(tree: PlanarTree, fmt: str = "paren") -> str:
    """Render the tree as text.

    paren -- nested symbols, e.g. "c(a,a)"; leaves are bare letters
    dot   -- Graphviz digraph with preorder node ids and letter labels
    luka  -- the Lukasiewicz word itself, one symbol per node
    """
    if fmt == "luka":
        return tree.alphabet.format_word(tree_to_word(tree))
    if fmt == "paren":
        return _paren(tree)
    if fmt == "dot":
        return _dot(tree)
    raise ValueError(f"unknown format {fmt!r}, expected one of {SERIALIZE_FORMATS}")


def _paren(tree: PlanarTree) -> str:
    symbols = tree.alphabet.letters
    letters = tree.letters
    children = tree.children
    parts: list[str] = []
    # tokens are either ("node", index) or ("text", literal); LIFO order
    stack: list[tuple[str, object]] = [("node", 0)]
    while stack:
        kind, payload = stack.pop()
        if kind == "text":
            parts.append(payload)  # type: ignore[arg-type]
            continue
        node = payload  # type: ignore[assignment]
        parts.append(symbols[letters[node]])
        kids = children[node]
        if kids:
            parts.append("(")
            stack.append(("text", ")"))
            for pos in range(len(kids) - 1, -1, -1):
                stack.append(("node", kids[pos]))
                if pos > 0:
                    stack.append(("text", ","))
    return "".join(parts)


def _dot(tree: PlanarTree) -> str:
    symbols = tree.alphabet.letters
    lines = ["digraph tree {"]
    for i, letter in enumerate(tree.letters):
        lines.append(f'  n{i} [label="{symbols[letter]}"];')
    for parent, kids in enumerate(tree.children):
        for child in kids:
            lines.append(f"  n{parent} -> n{child};")
    lines.append("}")
    return "\n".join(lines)
