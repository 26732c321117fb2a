# Conjectures package
