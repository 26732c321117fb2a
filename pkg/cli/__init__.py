# Cli package
