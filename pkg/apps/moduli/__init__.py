# Moduli app
