# tests/test_architecture_imports.py
from __future__ import annotations

import ast
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def _find_forbidden_imports(root: Path, forbidden: list[str]) -> list[tuple[Path, int, str, str]]:
    violations: list[tuple[Path, int, str, str]] = []
    for path in root.rglob("*.py"):
        source = path.read_text(encoding="utf-8")
        tree = ast.parse(source, filename=str(path))
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                names = [alias.name for alias in node.names]
            elif isinstance(node, ast.ImportFrom) and node.level == 0:
                names = [node.module or ""]
            else:
                continue
            for name in names:
                top = name.split(".")[0]
                if top in forbidden:
                    line = source.splitlines()[node.lineno - 1].rstrip()
                    violations.append((path, node.lineno, top, line))
    return violations


def _report(violations: list[tuple[Path, int, str, str]]) -> str:
    return "\n".join(f"{path}:{lineno} [{item}] {line}" for path, lineno, item, line in violations)


def test_helpers_do_not_import_services_or_scripts() -> None:
    violations = _find_forbidden_imports(ROOT / "helpers", ["services", "scripts", "subprocess"])
    assert not violations, "helpers/* imports forbidden modules:\n" + _report(violations)


def test_services_do_not_import_scripts() -> None:
    violations = _find_forbidden_imports(ROOT / "services", ["scripts"])
    assert not violations, "services/* imports scripts:\n" + _report(violations)
