import sys

from .cli import main as _cli_main


def main() -> None:
    # `python -m flatmodels` behaves like `flatmodels`.
    sys.exit(_cli_main())


if __name__ == "__main__":
    main()
