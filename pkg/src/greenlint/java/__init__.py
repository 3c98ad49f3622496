"""Lossless Java tokenizer and structural parser."""

from .lexer import Token, tokenize
from .parser import Node, SyntaxTree, parse_java_source

__all__ = ["Token", "tokenize", "Node", "SyntaxTree", "parse_java_source"]
