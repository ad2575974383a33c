#!/usr/bin/env python3
"""
Layering checker for the operator calculus lab.

Numerical packages form a stack, lowest first:

    matcore -> funcalc -> (toi, besov) -> divdiff -> experiments

A package may import its own layer and the layers below it. None of them may import
runtime, storage, ui or app; core (errors, models) may only lean on matcore and funcalc.
Imports under ``if TYPE_CHECKING:`` are ignored.
"""

from __future__ import annotations

import ast
import sys
from dataclasses import dataclass
from pathlib import Path

NUMERICAL_RANK = {
    "matcore": 0,
    "funcalc": 1,
    "toi": 2,
    "besov": 2,
    "divdiff": 3,
    "experiments": 4,
}

OUTER = {"runtime", "storage", "ui", "app"}

# package -> packages it must never import (beyond the numerical ranking)
FORBIDDEN: dict[str, set[str]] = {
    **{package: OUTER for package in NUMERICAL_RANK},
    "core": OUTER | {"toi", "besov", "divdiff", "experiments"},
    "storage": {"runtime", "ui", "app"},
    "runtime": {"ui", "app"},
    "ui": {"app"},
}


@dataclass(frozen=True)
class Violation:
    path: Path
    line: int
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.path}:{self.line}: {self.source} -> {self.target}"


def _package_of(module: str) -> str | None:
    parts = module.split(".")
    if len(parts) < 2 or parts[0] != "src":
        return None
    return parts[1]


def _is_type_checking(test: ast.expr) -> bool:
    return (isinstance(test, ast.Name) and test.id == "TYPE_CHECKING") or (
        isinstance(test, ast.Attribute) and test.attr == "TYPE_CHECKING"
    )


def _imports(tree: ast.AST) -> list[tuple[int, str]]:
    found: list[tuple[int, str]] = []

    def visit(node: ast.AST) -> None:
        if isinstance(node, ast.If) and _is_type_checking(node.test):
            for child in node.orelse:
                visit(child)
            return
        if isinstance(node, ast.Import):
            found.extend((node.lineno, alias.name) for alias in node.names)
        elif isinstance(node, ast.ImportFrom) and node.module and node.level == 0:
            found.append((node.lineno, node.module))
        for child in ast.iter_child_nodes(node):
            visit(child)

    visit(tree)
    return found


def is_allowed(source: str, target: str) -> bool:
    if source == target:
        return True
    if target in FORBIDDEN.get(source, set()):
        return False
    if source in NUMERICAL_RANK and target in NUMERICAL_RANK:
        return NUMERICAL_RANK[target] < NUMERICAL_RANK[source]
    return True


def check_file(path: Path, src_dir: Path) -> list[Violation]:
    source = path.relative_to(src_dir).parts[0]
    tree = ast.parse(path.read_text(encoding="utf-8"), filename=str(path))
    violations: list[Violation] = []
    for line, module in _imports(tree):
        target = _package_of(module)
        if target is not None and not is_allowed(source, target):
            violations.append(Violation(path=path, line=line, source=source, target=target))
    return violations


def main() -> int:
    src_dir = Path(__file__).resolve().parent.parent.parent / "src"
    if not src_dir.exists():
        print(f"Error: src directory not found at {src_dir}")
        return 1

    violations = [
        violation
        for path in sorted(src_dir.rglob("*.py"))
        if path.parent != src_dir
        for violation in check_file(path, src_dir)
    ]
    if violations:
        print("Import boundary violations found:")
        for violation in violations:
            print(f"  {violation}")
        return 1
    print("No import boundary violations found.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
