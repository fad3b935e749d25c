# Function space app
