from .cli.entry_point import main

raise SystemExit(main())
