from drdlab.cli import main

main()
