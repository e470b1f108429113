"""
Entry point:

    python -m app.main sweep --preset example1 --seed 42 --out fig1a.csv
"""

from app.cli import cli


def main(argv=None) -> None:
    cli.main(args=argv, prog_name="qmem")


if __name__ == "__main__":
    main()
