"""The UDL declaration language: lexer, parser, checker and evaluators.

Submodules are imported explicitly (``unitcheck.lang.checker`` and so on);
this package module stays empty so :mod:`unitcheck.units` can use the AST
without a circular import.
"""
