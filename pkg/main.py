import sys

from src.cli.commands import dispatch


def main():
    """命令行主入口"""
    result = dispatch(sys.argv[1:])
    if result.payload:
        stream = sys.stdout if result.ok else sys.stderr
        stream.write(result.payload if result.payload.endswith("\n") else result.payload + "\n")
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
