from .repl import console_main

console_main()
