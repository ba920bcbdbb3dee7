# services/__init__.py
# Orchestration over helpers/: identity suites, solvers, weight transforms, quadrature oracle and report documents.
