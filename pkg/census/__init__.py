# Census package
