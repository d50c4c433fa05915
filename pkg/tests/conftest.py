# makes tests/ importable (bruteforce oracles) regardless of invocation dir
