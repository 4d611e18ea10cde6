from naflab.cli import main

raise SystemExit(main())
