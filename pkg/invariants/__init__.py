# Init for invariants package
