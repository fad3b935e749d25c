# Geometry app
