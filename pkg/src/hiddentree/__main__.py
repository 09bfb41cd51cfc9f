"""Module entry point so ``python -m hiddentree`` behaves like the console script."""

from .cli import run

if __name__ == "__main__":
    run()
