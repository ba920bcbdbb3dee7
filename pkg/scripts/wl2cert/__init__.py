# scripts/wl2cert/__init__.py
# wl2cert command-line entry point (python -m scripts.wl2cert).
