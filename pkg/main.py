"""
Spherical Orbit Engine
Main entry point; the same commands as `orbit-engine`.
"""

from engine.cli import cli


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
