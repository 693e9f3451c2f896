import sys

from mnesor.cli import main

sys.exit(main())
