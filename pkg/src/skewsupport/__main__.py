import sys

from skewsupport.cli import main

sys.exit(main())
