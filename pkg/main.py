import sys

from ke_square.cli import main

if __name__ == "__main__":
    sys.exit(main())
