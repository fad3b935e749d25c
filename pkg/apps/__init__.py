# Local apps
