"""Entry point for running boolfix as a module with 'python3 -m boolfix'."""

from .cli import app

if __name__ == "__main__":
    app()
