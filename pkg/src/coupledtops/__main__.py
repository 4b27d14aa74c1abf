# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

import sys

from coupledtops.experiments.cli import main

sys.exit(main())
