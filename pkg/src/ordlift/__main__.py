import sys

from ordlift.cli import main

sys.exit(main())
