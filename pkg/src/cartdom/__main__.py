from cartdom.cli import main
import sys

sys.exit(main())
