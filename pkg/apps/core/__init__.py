# Core app
