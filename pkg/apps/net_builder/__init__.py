# Net builder app
