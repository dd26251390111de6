# _author: Coke
# _date: 2024/9/2 10:31
# _description: 命令行退出码

EXIT_0_OK = 0
EXIT_1_INVALID = 1
EXIT_2_DOMAIN = 2
EXIT_64_USAGE = 64
EXIT_65_PARSE = 65
EXIT_70_INTERNAL = 70
